#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "artin.hpp"
#include "burnside.hpp"
#include "group.hpp"
#include "lattice.hpp"

namespace artinx {

struct CheckTally {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  void merge(const CheckTally& o) {
    checked += o.checked;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

/// Counting-set congruences over (H, U): H a p-subgroup class representative,
/// U cyclic and normal in H.
///   |C(H)| = |C'(H)| mod p; C'(H) = C(H') as sets;
///   H abelian, |U| = p, U < H: |C(H)| != 0 mod p iff H cyclic;
///   H a 2-group, |U| = 2, [H,H] <= U, |C(H)| odd: H cyclic or nonabelian of order 8.
CheckTally check_counting_lemmas(const GroupTable& g, const SubgroupLattice& lat);

/// (V : C_V(U)) divides A for every pair with nonzero count.
CheckTally check_centralizer_divisibility(const GroupTable& g, const std::vector<CongruencePair>& pairs,
                                          std::uint64_t exponent);

/// U <= Z(V): c(U, V) = c(U_p, V_p).
CheckTally check_central_reduction(const GroupTable& g, const SubgroupLattice& lat,
                                   const std::vector<CongruencePair>& pairs);

/// Triangularity, diagonal = (N_G(V):V), first column = (G:V), last row all ones,
/// and nonzero marks exactly on subconjugate pairs.
CheckTally check_mark_table(const GroupTable& g, const SubgroupLattice& lat, const MarkTable& table);

/// ghost_of(multiply_basis(U, V)) == ghost([G/U]) * ghost([G/V]) pointwise.
bool product_is_homomorphic(const GroupTable& g, const SubgroupLattice& lat, const MarkTable& table,
                            std::size_t u, std::size_t v);

bool is_abelian_subgroup(const GroupTable& g, const Subgroup& h);

}  // namespace artinx
