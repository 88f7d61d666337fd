#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "subgroup.hpp"

namespace artinx {

/// Family of subgroup classes on which e_U is 1.
struct Family {
  enum class Kind { AllCyclic, ExplicitClasses };
  Kind kind = Kind::AllCyclic;
  std::vector<std::size_t> classes;  // ExplicitClasses only

  static Family all_cyclic() { return {}; }
  static Family explicit_classes(std::vector<std::size_t> cls) {
    return {Kind::ExplicitClasses, std::move(cls)};
  }
};

/// Membership flag per class; throws PreconditionError on invalid indices.
std::vector<bool> family_mask(const SubgroupLattice& lat, const Family& family);

GhostVector family_vector(const SubgroupLattice& lat, const Family& family);

/// #{vU in V/U : <v, U> lies in the family}. Throws unless U is normal in V.
std::size_t cyclic_count(const GroupTable& g, const SubgroupLattice& lat, const Subgroup& u,
                         const Subgroup& v, const Family& family);

struct CongruencePair {
  std::size_t u_class = 0;
  std::size_t v_class = 0;
  Subgroup u;
  Subgroup v;
  std::uint64_t prime = 0;
  std::uint64_t index = 0;       // (V:U), a prime power > 1
  std::uint64_t count = 0;       // s(U,V)
  std::uint64_t constraint = 1;  // (V:U) / gcd((V:U), count)
};

/// V over class representatives, U over all normal subgroups of V of prime-power index.
std::vector<CongruencePair> congruence_pairs(const GroupTable& g, const SubgroupLattice& lat,
                                             const Family& family);

/// lcm of the pair constraints.
std::uint64_t artin_exponent_congruence(const GroupTable& g, const SubgroupLattice& lat,
                                        const Family& family);
std::uint64_t exponent_from_pairs(const std::vector<CongruencePair>& pairs);

/// Smallest divisor n of |G| with n * e_U in B(G), by exact back-substitution.
std::uint64_t artin_exponent_marks(const GroupTable& g, const SubgroupLattice& lat, const MarkTable& table,
                                   const Family& family);

enum class TwoGroupKind { Quaternion, Dihedral, Semidihedral, Other };
std::string to_string(TwoGroupKind k);

/// Searches for g, h satisfying the quaternion / dihedral / semidihedral relations
/// with |<g>| = |G|/2 >= 4 (>= 8 for semidihedral). Throws unless |G| is a power of 2.
TwoGroupKind recognize_2group(const GroupTable& g);

struct Prediction {
  std::optional<std::uint64_t> value;
  std::string branch;
  // Q / D / SD only: the competing 2-group predictions.
  std::optional<std::uint64_t> two_group_formula;  // Q, D -> 2; otherwise 2^(a-1)
  std::optional<std::uint64_t> index_two_formula;  // 4 if G' cyclic, else 2
  std::optional<bool> commutator_core_cyclic;      // {g : [g, G] <= Z} cyclic
  std::optional<bool> normalizing_set_cyclic;      // {g : [g, Z] <= Z} cyclic
};

Prediction closed_form_predictor(const GroupTable& g, const SubgroupLattice& lat);

/// Prime-power decomposition helper: returns {p, alpha} if n = p^alpha (alpha >= 1).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

struct CSets {
  std::size_t c = 0;
  std::size_t c_prime = 0;
  Subgroup h_prime;
  std::vector<ElementSet> c_members;        // the cyclic V with U < V, (V:U) = p
  std::vector<ElementSet> c_prime_members;  // those normal in H
};

/// Requires H a nontrivial p-subgroup, U cyclic, U <= H, U normal in H.
CSets count_C_sets(const GroupTable& g, const Subgroup& h, const Subgroup& u);

/// The cyclic V <= H with U <= V and (V:U) = p (no normality requirement on U).
std::vector<ElementSet> c_set(const GroupTable& g, const Subgroup& h, const Subgroup& u, std::uint64_t p);

struct SylowEntry {
  std::uint64_t prime = 0;
  std::uint64_t exponent_part = 1;   // p-part of A(G)
  std::uint64_t sylow_order = 1;
  std::uint64_t sylow_exponent = 1;  // A(P) computed on P as its own group
  bool match = true;
};

std::vector<SylowEntry> sylow_reduction_report(const GroupTable& g, const SubgroupLattice& lat,
                                               const Family& family);

/// Pairs whose constraint attains the p-part of the exponent for some prime.
std::vector<std::size_t> binding_pairs(const std::vector<CongruencePair>& pairs, std::uint64_t exponent);

}  // namespace artinx
