#include "burnside.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace artinx {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  std::string out;
  // work with negative values so INT128_MIN is representable
  i128 x = neg ? v : -v;
  while (x != 0) {
    out += static_cast<char>('0' - static_cast<int>(x % 10));
    x /= 10;
  }
  if (neg) out += '-';
  std::reverse(out.begin(), out.end());
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

MarkTable::MarkTable(std::size_t n, std::vector<std::int64_t> marks) : n_(n), m_(std::move(marks)) {
  if (m_.size() != n_ * n_) throw PreconditionError("mark table has wrong size");
  below_.resize(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (m_[v * n_ + u] != 0) below_[u].emplace_back(static_cast<std::uint32_t>(v), m_[v * n_ + u]);
}

namespace {

// Number of cosets x V (x from `reps`) with x^-1 U x inside V.
std::int64_t count_fixed_cosets(const GroupTable& g, const Subgroup& u, const Subgroup& v,
                                const std::vector<Element>& reps) {
  std::int64_t fixed = 0;
  for (Element x : reps) {
    const Element xi = g.inv(x);
    bool inside = true;
    for (Element s : u.generators) {
      if (!v.contains(g.mul(g.mul(xi, s), x))) {
        inside = false;
        break;
      }
    }
    if (inside) ++fixed;
  }
  return fixed;
}

}  // namespace

std::int64_t mark(const GroupTable& g, const SubgroupLattice& lat, std::size_t u_class, std::size_t v_class) {
  if (u_class >= lat.size() || v_class >= lat.size()) throw PreconditionError("class index out of range");
  const Subgroup& u = lat[u_class].representative;
  const Subgroup& v = lat[v_class].representative;
  if (v.order % u.order != 0) return 0;
  return count_fixed_cosets(g, u, v, cosets(g, whole_group(g), v));
}

MarkTable build_mark_table(const GroupTable& g, const SubgroupLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<std::int64_t> m(n * n, 0);
  const Subgroup whole = whole_group(g);
  for (std::size_t v = 0; v < n; ++v) {
    const Subgroup& vs = lat[v].representative;
    const std::vector<Element> reps = cosets(g, whole, vs);
    // only classes up to v can be subconjugate to V
    for (std::size_t u = 0; u <= v; ++u) {
      const Subgroup& us = lat[u].representative;
      if (vs.order % us.order != 0) continue;
      m[v * n + u] = count_fixed_cosets(g, us, vs, reps);
    }
  }
  return MarkTable(n, std::move(m));
}

GhostVector ghost_of(const MarkTable& table, const BurnsideElement& x) {
  const std::size_t n = table.size();
  if (x.coeffs.size() != n) throw PreconditionError("element dimension does not match mark table");
  GhostVector out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (x.coeffs[v] == 0) continue;
    for (std::size_t u = 0; u <= v; ++u) {
      const std::int64_t mv = table.at(v, u);
      if (mv == 0) continue;
      std::int64_t term;
      if (__builtin_mul_overflow(x.coeffs[v], mv, &term) || __builtin_add_overflow(out[u], term, &out[u]))
        throw LimitError("ghost coordinate overflow");
    }
  }
  return out;
}

BurnsideElement basis_element(std::size_t n, std::size_t v_class) {
  if (v_class >= n) throw PreconditionError("class index out of range");
  BurnsideElement x{std::vector<std::int64_t>(n, 0)};
  x.coeffs[v_class] = 1;
  return x;
}

std::vector<Rational> solve_exact(const MarkTable& table, const GhostVector& target) {
  const std::size_t n = table.size();
  if (target.size() != n) throw PreconditionError("ghost vector dimension does not match mark table");
  std::vector<Rational> c(n);
  // coefficients above the highest nonzero target coordinate vanish
  std::size_t top = n;
  while (top > 0 && target[top - 1] == 0) --top;
  for (std::size_t u = top; u-- > 0;) {
    Rational acc(target[u]);
    for (const auto& [v, mvu] : table.column_below(u)) {
      if (v >= top || c[v].is_zero()) continue;
      acc = acc - c[v] * Rational(mvu);
    }
    const std::int64_t diag = table.at(u, u);
    if (diag == 0) throw PreconditionError("mark table has a zero diagonal entry");
    c[u] = acc / Rational(diag);
  }
  return c;
}

MembershipResult solve_membership(const MarkTable& table, const GhostVector& target) {
  const std::vector<Rational> c = solve_exact(table, target);
  BurnsideElement x{std::vector<std::int64_t>(c.size(), 0)};
  for (std::size_t u = c.size(); u-- > 0;) {
    if (!c[u].is_integer()) {
      const i128 den = c[u].den();
      return NotIntegral{u, static_cast<std::int64_t>(den)};
    }
    x.coeffs[u] = c[u].to_int64();
  }
  return x;
}

std::uint64_t conductor(const MarkTable& table) {
  const std::size_t n = table.size();
  std::uint64_t result = 1;
  GhostVector e(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    e[u] = 1;
    for (const Rational& r : solve_exact(table, e)) {
      if (r.den() > static_cast<i128>(UINT64_MAX)) throw LimitError("conductor exceeds 64 bits");
      result = lcm_u64(result, static_cast<std::uint64_t>(r.den()));
    }
    e[u] = 0;
  }
  return result;
}

BurnsideElement multiply_basis(const GroupTable& g, const SubgroupLattice& lat, std::size_t u_class,
                               std::size_t v_class) {
  if (u_class >= lat.size() || v_class >= lat.size()) throw PreconditionError("class index out of range");
  const Subgroup& us = lat[u_class].representative;
  const Subgroup& vs = lat[v_class].representative;
  const Subgroup whole = whole_group(g);

  struct CosetSpace {
    std::vector<Element> reps;
    std::vector<std::uint32_t> id;  // element -> coset of gH
  };
  auto coset_space = [&](const Subgroup& h) {
    CosetSpace cs;
    cs.reps = cosets(g, whole, h);
    cs.id.assign(g.order(), 0);
    const std::vector<Element> hm = h.members.members();
    for (std::size_t i = 0; i < cs.reps.size(); ++i)
      for (Element y : hm) cs.id[g.mul(cs.reps[i], y)] = static_cast<std::uint32_t>(i);
    return cs;
  };
  const CosetSpace a = coset_space(us);
  const CosetSpace b = coset_space(vs);
  const std::size_t na = a.reps.size(), nb = b.reps.size();

  BurnsideElement out{std::vector<std::int64_t>(lat.size(), 0)};
  std::vector<bool> seen(na * nb, false);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < na * nb; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t i = queue[qi] / nb, j = queue[qi] % nb;
      for (Element x : g.generators()) {
        const std::size_t ni = a.id[g.mul(x, a.reps[i])];
        const std::size_t nj = b.id[g.mul(x, b.reps[j])];
        const std::size_t k = ni * nb + nj;
        if (!seen[k]) {
          seen[k] = true;
          queue.push_back(k);
        }
      }
    }
    // stabilizer of (xU, yV) is xUx^-1 ∩ yVy^-1
    const Element x = a.reps[start / nb], y = b.reps[start % nb];
    const ElementSet stab = conjugate_set(g, x, us.members) & conjugate_set(g, y, vs.members);
    out.coeffs[lat.class_index(stab)] += 1;
  }
  return out;
}

}  // namespace artinx
