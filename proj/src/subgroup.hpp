#pragma once

#include <cstddef>
#include <vector>

#include "element_set.hpp"
#include "group.hpp"

namespace artinx {

struct Subgroup {
  ElementSet members;
  std::size_t order = 1;
  bool is_cyclic = true;
  std::vector<Element> generators;  // small generating set, possibly empty

  [[nodiscard]] bool contains(Element g) const { return members.contains(g); }
  [[nodiscard]] bool is_subgroup_of(const Subgroup& other) const {
    return members.is_subset_of(other.members);
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Wraps a member set already known to be a subgroup (computes order and cyclicity).
Subgroup make_subgroup(const GroupTable& g, const ElementSet& members,
                       std::vector<Element> generators = {});

/// Least subgroup containing `seed`.
Subgroup generated_subgroup(const GroupTable& g, const std::vector<Element>& seed);

/// Subgroup generated by `base` and one more element.
Subgroup join_element(const GroupTable& g, const Subgroup& base, Element extra);

Subgroup whole_group(const GroupTable& g);
Subgroup trivial_subgroup();

/// Checks closure; throws PreconditionError if `members` is not a subgroup.
Subgroup checked_subgroup(const GroupTable& g, const ElementSet& members);

/// {w : wu = uw for all u in U}
Subgroup centralizer(const GroupTable& g, const Subgroup& u);
Subgroup center(const GroupTable& g);

/// <[s, t] : s in S, t in T>
Subgroup commutator_closure(const GroupTable& g, const Subgroup& s, const Subgroup& t);

/// x U x^-1
ElementSet conjugate_set(const GroupTable& g, Element x, const ElementSet& u);

Subgroup normalizer(const GroupTable& g, const Subgroup& u);

/// True iff v U v^-1 = U for all v in V. Throws PreconditionError unless U <= V.
bool is_normal_in(const GroupTable& g, const Subgroup& u, const Subgroup& v);

/// Least element of each left coset vU in V, ascending. Throws unless U <= V.
std::vector<Element> cosets(const GroupTable& g, const Subgroup& v, const Subgroup& u);

/// <v, U> for U normal in a subgroup containing v: the union of the cosets v^k U.
ElementSet join_normal(const GroupTable& g, const ElementSet& u, Element v);

/// Elements of `s` whose order is a power of p (a subgroup when the Sylow p-subgroup is normal).
ElementSet p_elements(const GroupTable& g, const ElementSet& s, std::size_t p);

/// Re-index a subgroup as a standalone group (elements in ascending order).
GroupTable subgroup_as_group(const GroupTable& g, const Subgroup& s);

}  // namespace artinx
