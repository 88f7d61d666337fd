#include "checks.hpp"

#include <algorithm>
#include <sstream>

namespace artinx {

bool is_abelian_subgroup(const GroupTable& g, const Subgroup& h) {
  for (Element a : h.generators)
    for (Element b : h.generators)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

namespace {

std::string describe(const SubgroupLattice& lat, const Subgroup& s) {
  const auto c = lat.class_of(s.members);
  std::string out = c ? lat.class_label(*c) : "?";
  return out + "[" + s.members.to_hex(lat.group_order()) + "]";
}

}  // namespace

CheckTally check_counting_lemmas(const GroupTable& g, const SubgroupLattice& lat) {
  CheckTally tally;
  for (const auto& cls : lat.classes()) {
    const Subgroup& h = cls.representative;
    const auto pp = prime_power(h.order);
    if (!pp) continue;
    const std::uint64_t p = pp->first;
    const bool h_abelian = is_abelian_subgroup(g, h);
    const Subgroup derived = commutator_closure(g, h, h);

    lat.for_each_subgroup([&](std::size_t, const Subgroup& u) {
      if (!u.is_cyclic || !u.is_subgroup_of(h) || !is_normal_in(g, u, h)) return;
      const CSets cs = count_C_sets(g, h, u);
      const std::string where = "H=" + describe(lat, h) + " U=" + describe(lat, u);

      ++tally.checked;
      if (cs.c % p != cs.c_prime % p)
        tally.violations.push_back("|C(H)| = |C'(H)| mod p fails at " + where + ": " + std::to_string(cs.c) +
                                   " vs " + std::to_string(cs.c_prime));

      ++tally.checked;
      if (cs.c_prime_members != c_set(g, cs.h_prime, u, p))
        tally.violations.push_back("C'(H) = C(H') fails at " + where);

      if (h_abelian && u.order == p && u.order < h.order) {
        ++tally.checked;
        if ((cs.c % p != 0) != h.is_cyclic)
          tally.violations.push_back("abelian cyclicity criterion fails at " + where + ": |C(H)| = " +
                                     std::to_string(cs.c));
      }

      if (p == 2 && u.order == 2 && derived.is_subgroup_of(u)) {
        ++tally.checked;
        if (cs.c % 2 == 1 && !(h.is_cyclic || (!h_abelian && h.order == 8)))
          tally.violations.push_back("odd |C(H)| with [H,H] <= U but H neither cyclic nor nonabelian of order 8 at " +
                                     where);
      }
    });
  }
  return tally;
}

CheckTally check_centralizer_divisibility(const GroupTable& g, const std::vector<CongruencePair>& pairs,
                                          std::uint64_t exponent) {
  CheckTally tally;
  for (const auto& pr : pairs) {
    if (pr.count == 0) continue;
    ++tally.checked;
    const Subgroup cu = centralizer(g, pr.u);
    const std::size_t cv = (cu.members & pr.v.members).size();
    const std::uint64_t idx = pr.v.order / cv;
    if (exponent % idx != 0) {
      std::ostringstream os;
      os << "(V : C_V(U)) = " << idx << " does not divide A = " << exponent << " for U class " << pr.u_class
         << ", V class " << pr.v_class;
      tally.violations.push_back(os.str());
    }
  }
  return tally;
}

CheckTally check_central_reduction(const GroupTable& g, const SubgroupLattice& lat,
                                   const std::vector<CongruencePair>& pairs) {
  CheckTally tally;
  const Family cyc = Family::all_cyclic();
  for (const auto& pr : pairs) {
    const Subgroup cv = centralizer(g, pr.v);
    if (!pr.u.is_subgroup_of(cv)) continue;  // U <= Z(V) iff V centralizes U
    // For noncyclic U the count is 0 by definition while U_p may be cyclic.
    if (!pr.u.is_cyclic) continue;
    ++tally.checked;
    const ElementSet vp_set = p_elements(g, pr.v.members, pr.prime);
    Subgroup vp;
    try {
      vp = checked_subgroup(g, vp_set);
    } catch (const std::exception&) {
      tally.violations.push_back("p-elements of V do not form a subgroup although U <= Z(V) (V class " +
                                 std::to_string(pr.v_class) + ")");
      continue;
    }
    const Subgroup up = make_subgroup(g, pr.u.members & vp.members);
    if (vp.order * (pr.u.order / up.order) != pr.v.order) {
      tally.violations.push_back("V != V_p x U_p' although U <= Z(V) (V class " + std::to_string(pr.v_class) + ")");
      continue;
    }
    std::size_t reduced = cyclic_count(g, lat, up, vp, cyc);
    std::size_t full = cyclic_count(g, lat, pr.u, pr.v, cyc);
    if (reduced != full) {
      std::ostringstream os;
      os << "c(U,V) = " << full << " but c(U_p,V_p) = " << reduced << " for U class " << pr.u_class
         << ", V class " << pr.v_class;
      tally.violations.push_back(os.str());
    }
  }
  return tally;
}

CheckTally check_mark_table(const GroupTable& g, const SubgroupLattice& lat, const MarkTable& table) {
  CheckTally tally;
  const std::size_t n = table.size();
  auto fail = [&](const std::string& what, std::size_t v, std::size_t u) {
    tally.violations.push_back(what + " at row " + std::to_string(v) + ", column " + std::to_string(u));
  };
  for (std::size_t v = 0; v < n; ++v) {
    const auto& vc = lat[v];
    ++tally.checked;
    if (table.at(v, 0) != static_cast<std::int64_t>(g.order() / vc.order())) fail("first column != (G:V)", v, 0);
    const std::int64_t diag = static_cast<std::int64_t>(g.order() / (vc.normalizer_index * vc.order()));
    if (table.at(v, v) != diag || diag <= 0) fail("diagonal != (N_G(V):V)", v, v);
    for (std::size_t u = 0; u < n; ++u) {
      ++tally.checked;
      const std::int64_t m = table.at(v, u);
      if (u > v) {
        if (m != 0) fail("nonzero above the diagonal", v, u);
        continue;
      }
      bool subconj = false;
      for (const auto& c : lat[u].conjugates)
        if (c.is_subgroup_of(vc.representative)) {
          subconj = true;
          break;
        }
      if ((m != 0) != subconj) fail("support differs from subconjugacy", v, u);
      if (m < 0) fail("negative mark", v, u);
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    if (table.at(n - 1, u) != 1) fail("last row not all ones", n - 1, u);
  return tally;
}

bool product_is_homomorphic(const GroupTable& g, const SubgroupLattice& lat, const MarkTable& table,
                            std::size_t u, std::size_t v) {
  const GhostVector lhs = ghost_of(table, multiply_basis(g, lat, u, v));
  const GhostVector gu = ghost_of(table, basis_element(table.size(), u));
  const GhostVector gv = ghost_of(table, basis_element(table.size(), v));
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (lhs[i] != gu[i] * gv[i]) return false;
  return true;
}

}  // namespace artinx
