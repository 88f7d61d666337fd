#include "artin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "errors.hpp"

namespace artinx {

std::vector<bool> family_mask(const SubgroupLattice& lat, const Family& family) {
  std::vector<bool> mask(lat.size(), false);
  if (family.kind == Family::Kind::AllCyclic) {
    for (std::size_t c = 0; c < lat.size(); ++c) mask[c] = lat[c].is_cyclic();
    return mask;
  }
  for (std::size_t c : family.classes) {
    if (c >= lat.size())
      throw PreconditionError("family class index " + std::to_string(c) + " out of range (" +
                              std::to_string(lat.size()) + " classes)");
    mask[c] = true;
  }
  return mask;
}

GhostVector family_vector(const SubgroupLattice& lat, const Family& family) {
  const std::vector<bool> mask = family_mask(lat, family);
  GhostVector e(lat.size(), 0);
  for (std::size_t c = 0; c < lat.size(); ++c) e[c] = mask[c] ? 1 : 0;
  return e;
}

namespace {

std::size_t count_with_mask(const GroupTable& g, const SubgroupLattice& lat, const Subgroup& u,
                            const Subgroup& v, const std::vector<bool>& mask, bool all_cyclic) {
  if (all_cyclic && !u.is_cyclic) return 0;
  std::size_t count = 0;
  for (Element rep : cosets(g, v, u)) {
    const ElementSet joined = join_normal(g, u.members, rep);
    if (mask[lat.class_index(joined)]) ++count;
  }
  return count;
}

}  // namespace

std::size_t cyclic_count(const GroupTable& g, const SubgroupLattice& lat, const Subgroup& u,
                         const Subgroup& v, const Family& family) {
  if (!is_normal_in(g, u, v)) throw PreconditionError("U is not normal in V");
  return count_with_mask(g, lat, u, v, family_mask(lat, family),
                         family.kind == Family::Kind::AllCyclic);
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (n % p) ++p;
  unsigned alpha = 0;
  while (n % p == 0) {
    n /= p;
    ++alpha;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, alpha);
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

std::vector<CongruencePair> congruence_pairs(const GroupTable& g, const SubgroupLattice& lat,
                                             const Family& family) {
  const std::vector<bool> mask = family_mask(lat, family);
  const bool all_cyclic = family.kind == Family::Kind::AllCyclic;
  std::vector<CongruencePair> pairs;
  for (std::size_t vc = 0; vc < lat.size(); ++vc) {
    const Subgroup& v = lat[vc].representative;
    lat.for_each_subgroup([&](std::size_t uc, const Subgroup& u) {
      if (u.order >= v.order || v.order % u.order != 0) return;
      if (!u.is_subgroup_of(v)) return;
      const std::uint64_t index = v.order / u.order;
      const auto pp = prime_power(index);
      if (!pp) return;
      if (!is_normal_in(g, u, v)) return;
      CongruencePair pair;
      pair.u_class = uc;
      pair.v_class = vc;
      pair.u = u;
      pair.v = v;
      pair.prime = pp->first;
      pair.index = index;
      pair.count = count_with_mask(g, lat, u, v, mask, all_cyclic);
      pair.constraint = index / std::gcd(index, pair.count);
      pairs.push_back(std::move(pair));
    });
  }
  return pairs;
}

std::uint64_t exponent_from_pairs(const std::vector<CongruencePair>& pairs) {
  std::uint64_t e = 1;
  for (const auto& p : pairs) e = lcm_u64(e, p.constraint);
  return e;
}

std::uint64_t artin_exponent_congruence(const GroupTable& g, const SubgroupLattice& lat,
                                        const Family& family) {
  return exponent_from_pairs(congruence_pairs(g, lat, family));
}

std::uint64_t artin_exponent_marks(const GroupTable& g, const SubgroupLattice& lat, const MarkTable& table,
                                   const Family& family) {
  const GhostVector e = family_vector(lat, family);
  const std::uint64_t order = g.order();
  for (std::uint64_t n = 1; n <= order; ++n) {
    if (order % n) continue;
    GhostVector target(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) target[i] = e[i] * static_cast<std::int64_t>(n);
    if (std::holds_alternative<BurnsideElement>(solve_membership(table, target))) return n;
  }
  throw std::logic_error("|G| * e_U is not in B(G): mark table is inconsistent");
}

std::vector<std::size_t> binding_pairs(const std::vector<CongruencePair>& pairs, std::uint64_t exponent) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pr = pairs[i];
    if (pr.constraint <= 1) continue;
    // constraint is a power of pr.prime
    if (p_part(exponent, pr.prime) == pr.constraint) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(TwoGroupKind k) {
  switch (k) {
    case TwoGroupKind::Quaternion: return "Q";
    case TwoGroupKind::Dihedral: return "D";
    case TwoGroupKind::Semidihedral: return "SD";
    case TwoGroupKind::Other: return "Other";
  }
  return "Other";
}

TwoGroupKind recognize_2group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n < 2 || (n & (n - 1)) != 0) throw PreconditionError("recognize_2group needs a group of order 2^k");
  const std::size_t m = n / 2;  // 2^n in the relations
  if (m < 4) return TwoGroupKind::Other;
  for (Element x = 0; x < n; ++x) {
    if (g.element_order(x) != m) continue;
    const ElementSet cyc = generated_subgroup(g, {x}).members;
    const Element half = g.power(x, m / 2);
    const Element inv_x = g.inv(x);
    const Element twisted = g.power(x, m / 2 - 1);  // x^(-1 + m/2)
    for (Element h = 0; h < n; ++h) {
      if (cyc.contains(h)) continue;
      const Element h2 = g.mul(h, h);
      const Element hxh = g.conj(h, x);
      if (hxh == inv_x && h2 == half) return TwoGroupKind::Quaternion;
      if (hxh == inv_x && h2 == GroupTable::identity()) return TwoGroupKind::Dihedral;
      if (m >= 8 && hxh == twisted && h2 == GroupTable::identity()) return TwoGroupKind::Semidihedral;
    }
  }
  return TwoGroupKind::Other;
}

Prediction closed_form_predictor(const GroupTable& g, const SubgroupLattice& lat) {
  Prediction pred;
  if (lat[lat.size() - 1].is_cyclic()) {
    pred.value = 1;
    pred.branch = "cyclic";
    return pred;
  }
  const auto pp = prime_power(g.order());
  if (!pp) {
    pred.branch = "not a p-group";
    return pred;
  }
  const auto [p, alpha] = *pp;
  std::uint64_t p_alpha_minus_1 = 1;
  for (unsigned i = 1; i < alpha; ++i) p_alpha_minus_1 *= p;
  if (p != 2) {
    pred.value = p_alpha_minus_1;
    pred.branch = "odd p-group";
    return pred;
  }
  const TwoGroupKind kind = recognize_2group(g);
  if (kind == TwoGroupKind::Other) {
    pred.value = p_alpha_minus_1;
    pred.branch = "2-group";
    return pred;
  }

  // Q, D, SD have a center of order 2
  const Subgroup z = center(g);
  ElementSet core, normalizing;
  for (Element x = 0; x < g.order(); ++x) {
    bool in_core = true;
    for (Element y = 0; y < g.order() && in_core; ++y)
      in_core = z.contains(g.commutator(x, y));
    if (in_core) core.insert(x);
    bool in_norm = true;
    z.members.for_each([&](Element u) { in_norm = in_norm && z.contains(g.commutator(x, u)); });
    if (in_norm) normalizing.insert(x);
  }
  pred.commutator_core_cyclic = checked_subgroup(g, core).is_cyclic;
  pred.normalizing_set_cyclic = checked_subgroup(g, normalizing).is_cyclic;
  pred.index_two_formula = *pred.commutator_core_cyclic ? 4 : 2;
  if (kind == TwoGroupKind::Semidihedral) {
    pred.two_group_formula = p_alpha_minus_1;
    pred.value = pred.index_two_formula;
    pred.branch = "SD";
  } else {
    pred.two_group_formula = 2;
    pred.value = 2;
    pred.branch = "Q or D";
  }
  return pred;
}

// ---------------------------------------------------------------------------

std::vector<ElementSet> c_set(const GroupTable& g, const Subgroup& h, const Subgroup& u, std::uint64_t p) {
  std::vector<ElementSet> out;
  const std::size_t target = u.order * p;
  h.members.for_each([&](Element x) {
    if (g.element_order(x) != target) return;
    const Subgroup cyc = generated_subgroup(g, {x});
    if (!u.is_subgroup_of(cyc)) return;
    if (std::find(out.begin(), out.end(), cyc.members) == out.end()) out.push_back(cyc.members);
  });
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) { return lex_less(a, b); });
  return out;
}

CSets count_C_sets(const GroupTable& g, const Subgroup& h, const Subgroup& u) {
  const auto pp = prime_power(h.order);
  if (!pp) throw PreconditionError("H must be a nontrivial p-subgroup");
  if (!u.is_subgroup_of(h)) throw PreconditionError("U is not contained in H");
  if (!u.is_cyclic) throw PreconditionError("U must be cyclic");
  if (!is_normal_in(g, u, h)) throw PreconditionError("U is not normal in H");
  const std::uint64_t p = pp->first;

  CSets out;
  out.c_members = c_set(g, h, u, p);
  out.c = out.c_members.size();
  for (const ElementSet& v : out.c_members) {
    if (is_normal_in(g, make_subgroup(g, v), h)) out.c_prime_members.push_back(v);
  }
  out.c_prime = out.c_prime_members.size();

  ElementSet hp;
  const std::vector<Element> hgens = h.generators;
  h.members.for_each([&](Element x) {
    for (Element y : hgens)
      if (!u.contains(g.commutator(x, y))) return;
    hp.insert(x);
  });
  out.h_prime = checked_subgroup(g, hp);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<SylowEntry> sylow_reduction_report(const GroupTable& g, const SubgroupLattice& lat,
                                               const Family& family) {
  const std::uint64_t a = artin_exponent_congruence(g, lat, family);
  const std::vector<bool> mask = family_mask(lat, family);
  std::vector<SylowEntry> out;
  for (std::uint64_t p : prime_divisors(g.order())) {
    SylowEntry e;
    e.prime = p;
    e.exponent_part = p_part(a, p);
    e.sylow_order = p_part(g.order(), p);
    const SubgroupClass* syl = nullptr;
    for (const auto& cls : lat.classes())
      if (cls.order() == e.sylow_order) {
        syl = &cls;
        break;
      }
    if (!syl) throw std::logic_error("no Sylow subgroup found");
    const Subgroup& ps = syl->representative;
    const GroupTable pg = subgroup_as_group(g, ps);
    const SubgroupLattice plat = enumerate_subgroups(pg);
    // a subgroup of P is in the family iff its G-class is
    const std::vector<Element> embed = ps.members.members();
    std::vector<std::size_t> sub_family;
    for (std::size_t c = 0; c < plat.size(); ++c) {
      ElementSet image;
      plat[c].representative.members.for_each([&](Element x) { image.insert(embed[x]); });
      if (mask[lat.class_index(image)]) sub_family.push_back(c);
    }
    e.sylow_exponent = artin_exponent_congruence(pg, plat, Family::explicit_classes(sub_family));
    e.match = e.exponent_part == e.sylow_exponent;
    out.push_back(e);
  }
  return out;
}

}  // namespace artinx
