#include "group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace artinx {

namespace {

std::vector<Element> closure_order_greedy_generators(const GroupTable& g,
                                                     const std::vector<std::size_t>& orders) {
  std::vector<Element> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders[a] > orders[b]; });

  std::vector<Element> gens;
  ElementSet span = ElementSet::singleton(GroupTable::identity());
  std::size_t span_size = 1;
  for (Element cand : by_order) {
    if (span_size == g.order()) break;
    if (span.contains(cand)) continue;
    gens.push_back(cand);
    // re-close the span under right multiplication by all generators
    std::vector<Element> queue = span.members();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Element s : gens) {
        const Element y = g.mul(queue[i], s);
        if (!span.contains(y)) {
          span.insert(y);
          queue.push_back(y);
        }
      }
    }
    span_size = queue.size();
  }
  return gens;
}

}  // namespace

GroupTable::GroupTable(std::size_t order, std::vector<std::uint8_t> mult,
                       std::vector<std::string> labels)
    : order_(order), mult_(std::move(mult)), labels_(std::move(labels)) {
  if (order_ == 0 || order_ > kMaxOrder)
    throw LimitError("group order must lie in [1, 256], got " + std::to_string(order_));
  if (mult_.size() != order_ * order_)
    throw PreconditionError("multiplication table has wrong size");
  if (!labels_.empty() && labels_.size() != order_)
    throw PreconditionError("element label count does not match order");

  // identity row and column
  for (std::size_t a = 0; a < order_; ++a) {
    if (mult_[a] != a || mult_[a * order_] != a)
      throw PreconditionError("relations inconsistent: element 0 is not the identity");
  }
  // Latin square
  for (std::size_t a = 0; a < order_; ++a) {
    std::vector<bool> row(order_, false), col(order_, false);
    for (std::size_t b = 0; b < order_; ++b) {
      const auto r = mult_[a * order_ + b];
      const auto c = mult_[b * order_ + a];
      if (r >= order_ || c >= order_ || row[r] || col[c])
        throw PreconditionError("relations inconsistent: table is not a Latin square");
      row[r] = col[c] = true;
    }
  }
  inv_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      if (mult_[a * order_ + b] == 0) inv_[a] = static_cast<std::uint8_t>(b);
  for (std::size_t a = 0; a < order_; ++a) {
    if (mult_[inv_[a] * order_ + a] != 0)
      throw PreconditionError("relations inconsistent: left and right inverses differ");
  }
  // associativity on all triples
  for (std::size_t a = 0; a < order_; ++a) {
    const std::uint8_t* row_a = &mult_[a * order_];
    for (std::size_t b = 0; b < order_; ++b) {
      const std::uint8_t* row_ab = &mult_[static_cast<std::size_t>(row_a[b]) * order_];
      const std::uint8_t* row_b = &mult_[b * order_];
      for (std::size_t c = 0; c < order_; ++c) {
        if (row_ab[c] != row_a[row_b[c]])
          throw PreconditionError("relations inconsistent: multiplication is not associative");
      }
    }
  }

  elem_order_.assign(order_, 1);
  for (std::size_t g = 0; g < order_; ++g) {
    std::size_t k = 1;
    Element x = static_cast<Element>(g);
    while (x != 0) {
      x = mul(x, static_cast<Element>(g));
      ++k;
    }
    elem_order_[g] = k;
  }
  generators_ = closure_order_greedy_generators(*this, elem_order_);
}

Element GroupTable::power(Element g, std::uint64_t k) const {
  Element result = identity();
  Element base = g;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool GroupTable::is_abelian() const {
  for (Element a : generators_)
    for (Element b : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string GroupTable::label(Element g) const {
  if (!labels_.empty()) return labels_[g];
  return "e" + std::to_string(g);
}

GroupTable GroupTable::relabeled(const std::vector<Element>& perm) const {
  if (perm.size() != order_ || perm[0] != 0)
    throw PreconditionError("relabeling must be a permutation fixing the identity");
  std::vector<std::uint8_t> mult(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b)
      mult[perm[a] * order_ + perm[b]] = static_cast<std::uint8_t>(perm[mul(
          static_cast<Element>(a), static_cast<Element>(b))]);
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) labels[perm[a]] = labels_[a];
  }
  return GroupTable(order_, std::move(mult), std::move(labels));
}

std::vector<Element> random_relabeling(std::size_t order, std::mt19937_64& rng) {
  std::vector<Element> perm(order);
  std::iota(perm.begin(), perm.end(), Element{0});
  if (order > 2) std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Spec grammar

namespace {

bool is_power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned parse_uint(std::string_view digits, std::string_view token) {
  unsigned value = 0;
  if (digits.empty()) throw ParseError("malformed token '" + std::string(token) + "': missing number");
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("malformed token '" + std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

GroupSpec parse_factor(std::string_view token) {
  if (token.empty()) throw ParseError("malformed token: empty factor");
  if (token.substr(0, 2) == "SD") {
    const unsigned n = parse_uint(token.substr(2), token);
    if (!is_power_of_two(n) || n < 16)
      throw ParseError("semidihedral order must be 2^k with k >= 4, got " + std::to_string(n));
    return GroupSpec::semidihedral(n);
  }
  const char head = token.front();
  const unsigned n = parse_uint(token.substr(1), token);
  switch (head) {
    case 'C':
      if (n < 1) throw ParseError("cyclic order must be positive");
      return GroupSpec::cyclic(n);
    case 'D':
      if (n % 2 != 0 || n < 4)
        throw ParseError("dihedral order must be even and >= 4, got " + std::to_string(n));
      return GroupSpec::dihedral(n);
    case 'Q':
      if (!is_power_of_two(n) || n < 8)
        throw ParseError("quaternion order must be 2^k with k >= 3, got " + std::to_string(n));
      return GroupSpec::quaternion(n);
    case 'S':
      if (n < 1) throw ParseError("symmetric degree must be positive");
      return GroupSpec::symmetric(n);
    case 'A':
      if (n < 1) throw ParseError("alternating degree must be positive");
      return GroupSpec::alternating(n);
    case 'H':
      if (!is_prime(n)) throw ParseError("Heisenberg parameter must be prime, got " + std::to_string(n));
      return GroupSpec::heisenberg(n);
    default:
      throw ParseError("malformed token '" + std::string(token) + "'");
  }
}

CyclePerm parse_cycle_perm(std::string_view text) {
  CyclePerm perm;
  std::vector<bool> used;
  text = trim(text);
  if (text.empty()) throw ParseError("malformed permutation: empty generator");
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("malformed permutation '" + std::string(text) + "'");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos)
      throw ParseError("malformed permutation '" + std::string(text) + "': unclosed cycle");
    std::string_view body = text.substr(i + 1, close - i - 1);
    Cycle cycle;
    std::size_t j = 0;
    while (j < body.size()) {
      if (body[j] == ' ' || body[j] == ',') {
        ++j;
        continue;
      }
      std::size_t k = j;
      while (k < body.size() && body[k] >= '0' && body[k] <= '9') ++k;
      if (k == j) throw ParseError("malformed permutation cycle '(" + std::string(body) + ")'");
      const unsigned pt = parse_uint(body.substr(j, k - j), body);
      if (pt == 0) throw ParseError("permutation points are 1-based");
      if (pt > 64) throw ParseError("permutation degree above 64 is not supported");
      if (used.size() <= pt) used.resize(pt + 1, false);
      if (used[pt]) throw ParseError("point " + std::to_string(pt) + " repeated in permutation");
      used[pt] = true;
      cycle.push_back(pt);
      j = k;
    }
    if (!cycle.empty()) perm.push_back(std::move(cycle));
    i = close + 1;
  }
  return perm;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty group spec");
  if (text.substr(0, 5) == "perm:") {
    std::vector<CyclePerm> gens;
    std::string_view rest = text.substr(5);
    if (trim(rest).empty()) throw ParseError("perm: needs at least one generator");
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      const char c = i < rest.size() ? rest[i] : ',';
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      if (depth < 0 || depth > 1) throw ParseError("malformed permutation: unbalanced parentheses");
      if (c == ',' && depth == 0) {
        gens.push_back(parse_cycle_perm(rest.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (depth != 0) throw ParseError("malformed permutation: unclosed cycle");
    return GroupSpec::permutations(std::move(gens));
  }

  std::vector<GroupSpec> factors;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = text.find('x', start);
    const std::size_t stop = x == std::string_view::npos ? text.size() : x;
    factors.push_back(parse_factor(trim(text.substr(start, stop - start))));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  if (factors.empty()) throw ParseError("product of zero factors");
  if (factors.size() == 1) return std::move(factors.front());
  return GroupSpec::product(std::move(factors));
}

std::string to_string(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: return "C" + std::to_string(spec.param);
    case K::Dihedral: return "D" + std::to_string(spec.param);
    case K::Quaternion: return "Q" + std::to_string(spec.param);
    case K::Semidihedral: return "SD" + std::to_string(spec.param);
    case K::Symmetric: return "S" + std::to_string(spec.param);
    case K::Alternating: return "A" + std::to_string(spec.param);
    case K::Heisenberg: return "H" + std::to_string(spec.param);
    case K::DirectProduct: {
      std::string out;
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (i) out += 'x';
        out += to_string(spec.factors[i]);
      }
      return out;
    }
    case K::PermGenerators: {
      std::string out = "perm:";
      for (std::size_t i = 0; i < spec.perms.size(); ++i) {
        if (i) out += ',';
        if (spec.perms[i].empty()) out += "()";
        for (const auto& cycle : spec.perms[i]) {
          out += '(';
          for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(cycle[j]);
          }
          out += ')';
        }
      }
      return out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Construction

namespace {

using Perm = std::vector<std::uint8_t>;

GroupTable from_formula(std::size_t order, auto&& product, auto&& labeler) {
  std::vector<std::uint8_t> mult(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    labels[a] = labeler(a);
    for (std::size_t b = 0; b < order; ++b)
      mult[a * order + b] = static_cast<std::uint8_t>(product(a, b));
  }
  return GroupTable(order, std::move(mult), std::move(labels));
}

std::string gh_label(std::size_t a, std::size_t b) {
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a == 1) s += "g";
  else if (a > 1) s += "g^" + std::to_string(a);
  if (b) s += "h";
  return s;
}

// Metacyclic 2-generator family: elements g^a h^b (a mod m, b in {0,1}),
// h g h^-1 = g^twist, h^2 = g^hsq.
GroupTable build_metacyclic(std::size_t m, std::size_t twist, std::size_t hsq) {
  const std::size_t order = 2 * m;
  auto product = [=](std::size_t x, std::size_t y) {
    const std::size_t a = x % m, b = x / m, c = y % m, d = y / m;
    // g^a h^b g^c h^d = g^(a + c * twist^b) h^b h^d
    std::size_t exp = (a + (b ? (c * twist) % m : c)) % m;
    std::size_t hb = b + d;
    if (hb == 2) {
      exp = (exp + hsq) % m;
      hb = 0;
    }
    return exp + m * hb;
  };
  return from_formula(order, product, [=](std::size_t x) { return gh_label(x % m, x / m); });
}

std::string perm_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

GroupTable build_from_perms(const std::vector<CyclePerm>& gens_cycles) {
  unsigned degree = 1;
  for (const auto& p : gens_cycles)
    for (const auto& c : p)
      for (unsigned pt : c) degree = std::max(degree, pt);

  std::vector<Perm> gens;
  for (const auto& p : gens_cycles) {
    Perm perm(degree);
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    for (const auto& c : p)
      for (std::size_t i = 0; i < c.size(); ++i)
        perm[c[i] - 1] = static_cast<std::uint8_t>(c[(i + 1) % c.size()] - 1);
    gens.push_back(std::move(perm));
  }

  // (a * b)(x) = a(b(x))
  auto compose = [](const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
    return out;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Perm y = compose(elems[i], s);
      if (index.find(y) == index.end()) {
        if (elems.size() >= kMaxOrder)
          throw LimitError("order cap exceeded: permutation group has more than 256 elements");
        index.emplace(y, elems.size());
        elems.push_back(std::move(y));
      }
    }
  }
  const std::size_t order = elems.size();
  return from_formula(
      order, [&](std::size_t a, std::size_t b) { return index.at(compose(elems[a], elems[b])); },
      [&](std::size_t a) { return perm_label(elems[a]); });
}

CyclePerm long_cycle(unsigned from, unsigned to) {
  Cycle c;
  for (unsigned i = from; i <= to; ++i) c.push_back(i);
  return {c};
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  if (na * nb > kMaxOrder)
    throw LimitError("order cap exceeded: direct product has " + std::to_string(na * nb) + " elements");
  return from_formula(
      na * nb,
      [&](std::size_t x, std::size_t y) {
        return a.mul(static_cast<Element>(x % na), static_cast<Element>(y % na)) +
               na * b.mul(static_cast<Element>(x / na), static_cast<Element>(y / na));
      },
      [&](std::size_t x) {
        return "(" + a.label(static_cast<Element>(x % na)) + "," +
               b.label(static_cast<Element>(x / na)) + ")";
      });
}

std::uint64_t expected_order(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic:
    case K::Dihedral:
    case K::Quaternion:
    case K::Semidihedral: return spec.param;
    case K::Symmetric:
    case K::Alternating: {
      std::uint64_t f = 1;
      for (unsigned i = 2; i <= spec.param && f <= 100000; ++i) f *= i;
      if (spec.kind == K::Alternating && spec.param >= 2) f /= 2;
      return f;
    }
    case K::Heisenberg: {
      const std::uint64_t p = spec.param;
      return p > 1000 ? ~std::uint64_t{0} : p * p * p;
    }
    case K::DirectProduct: {
      std::uint64_t n = 1;
      for (const auto& f : spec.factors) {
        n *= expected_order(f);
        if (n > 1'000'000) return n;
      }
      return n;
    }
    case K::PermGenerators: return 0;
  }
  return 0;
}

}  // namespace

GroupTable build_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  const std::uint64_t n = expected_order(spec);
  if (n > kMaxOrder)
    throw LimitError("order cap exceeded: " + to_string(spec) + " has " + std::to_string(n) +
                     " elements (cap 256)");
  switch (spec.kind) {
    case K::Cyclic: {
      const std::size_t m = spec.param;
      if (m == 0) throw PreconditionError("cyclic order must be positive");
      return from_formula(
          m, [=](std::size_t a, std::size_t b) { return (a + b) % m; },
          [](std::size_t a) { return std::to_string(a); });
    }
    case K::Dihedral: {
      if (spec.param < 4 || spec.param % 2) throw PreconditionError("dihedral order must be even and >= 4");
      const std::size_t m = spec.param / 2;
      return build_metacyclic(m, m - 1, 0);
    }
    case K::Quaternion: {
      if (spec.param < 8 || (spec.param & (spec.param - 1)))
        throw PreconditionError("quaternion order must be 2^k, k >= 3");
      const std::size_t m = spec.param / 2;
      return build_metacyclic(m, m - 1, m / 2);
    }
    case K::Semidihedral: {
      if (spec.param < 16 || (spec.param & (spec.param - 1)))
        throw PreconditionError("semidihedral order must be 2^k, k >= 4");
      const std::size_t m = spec.param / 2;
      return build_metacyclic(m, m / 2 - 1, 0);
    }
    case K::Symmetric: {
      const unsigned d = spec.param;
      if (d <= 1) return build_from_perms({});
      return build_from_perms({CyclePerm{{1, 2}}, long_cycle(1, d)});
    }
    case K::Alternating: {
      const unsigned d = spec.param;
      if (d <= 2) return build_from_perms({});
      if (d == 3) return build_from_perms({CyclePerm{{1, 2, 3}}});
      return build_from_perms(
          {CyclePerm{{1, 2, 3}}, d % 2 ? long_cycle(1, d) : long_cycle(2, d)});
    }
    case K::Heisenberg: {
      const std::size_t p = spec.param;
      if (!is_prime(p)) throw PreconditionError("Heisenberg parameter must be prime");
      // (a,b,c) <-> [[1,a,c],[0,1,b],[0,0,1]]; index a + p b + p^2 c
      return from_formula(
          p * p * p,
          [=](std::size_t x, std::size_t y) {
            const std::size_t a = x % p, b = (x / p) % p, c = x / (p * p);
            const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
            return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
          },
          [=](std::size_t x) {
            return "[" + std::to_string(x % p) + "," + std::to_string((x / p) % p) + "," +
                   std::to_string(x / (p * p)) + "]";
          });
    }
    case K::DirectProduct: {
      if (spec.factors.empty()) throw PreconditionError("product of zero factors");
      GroupTable acc = build_group(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = direct_product(acc, build_group(spec.factors[i]));
      return acc;
    }
    case K::PermGenerators:
      return build_from_perms(spec.perms);
  }
  throw PreconditionError("unknown group spec kind");
}

}  // namespace artinx
