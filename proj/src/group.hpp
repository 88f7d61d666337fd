#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "element_set.hpp"

namespace artinx {

/// A finite group as an explicit multiplication table. Identity is index 0.
/// Immutable after construction; construction verifies the group axioms.
class GroupTable {
 public:
  /// `mult` is row-major: mult[a * order + b] = a * b.
  GroupTable(std::size_t order, std::vector<std::uint8_t> mult,
             std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] static constexpr Element identity() { return 0; }

  [[nodiscard]] Element mul(Element a, Element b) const {
    return mult_[static_cast<std::size_t>(a) * order_ + b];
  }
  [[nodiscard]] Element inv(Element a) const { return inv_[a]; }
  /// g x g^-1
  [[nodiscard]] Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  /// [g, h] = g h g^-1 h^-1
  [[nodiscard]] Element commutator(Element g, Element h) const {
    return mul(mul(g, h), mul(inv(g), inv(h)));
  }
  [[nodiscard]] Element power(Element g, std::uint64_t k) const;

  /// Least k >= 1 with g^k = identity.
  [[nodiscard]] std::size_t element_order(Element g) const { return elem_order_[g]; }

  /// A small generating set (greedy, largest element orders first).
  [[nodiscard]] const std::vector<Element>& generators() const { return generators_; }
  [[nodiscard]] ElementSet all() const { return ElementSet::prefix(order_); }

  [[nodiscard]] bool is_abelian() const;
  [[nodiscard]] std::string label(Element g) const;

  /// Same group with elements renumbered by `perm` (perm[old] = new, perm[0] = 0).
  [[nodiscard]] GroupTable relabeled(const std::vector<Element>& perm) const;

 private:
  std::size_t order_;
  std::vector<std::uint8_t> mult_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::size_t> elem_order_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
};

/// Random identity-fixing relabeling permutation for invariance checks.
std::vector<Element> random_relabeling(std::size_t order, std::mt19937_64& rng);

/// A permutation given in 1-based cycle notation.
using Cycle = std::vector<unsigned>;
using CyclePerm = std::vector<Cycle>;

struct GroupSpec {
  enum class Kind {
    Cyclic,
    Dihedral,
    Quaternion,
    Semidihedral,
    Symmetric,
    Alternating,
    Heisenberg,
    DirectProduct,
    PermGenerators,
  };

  Kind kind = Kind::Cyclic;
  unsigned param = 1;               // n, order, or p depending on kind
  std::vector<GroupSpec> factors;   // DirectProduct
  std::vector<CyclePerm> perms;     // PermGenerators

  static GroupSpec cyclic(unsigned n) { return {Kind::Cyclic, n, {}, {}}; }
  static GroupSpec dihedral(unsigned order) { return {Kind::Dihedral, order, {}, {}}; }
  static GroupSpec quaternion(unsigned order) { return {Kind::Quaternion, order, {}, {}}; }
  static GroupSpec semidihedral(unsigned order) { return {Kind::Semidihedral, order, {}, {}}; }
  static GroupSpec symmetric(unsigned n) { return {Kind::Symmetric, n, {}, {}}; }
  static GroupSpec alternating(unsigned n) { return {Kind::Alternating, n, {}, {}}; }
  static GroupSpec heisenberg(unsigned p) { return {Kind::Heisenberg, p, {}, {}}; }
  static GroupSpec product(std::vector<GroupSpec> fs) {
    return {Kind::DirectProduct, 0, std::move(fs), {}};
  }
  static GroupSpec permutations(std::vector<CyclePerm> gens) {
    return {Kind::PermGenerators, 0, {}, std::move(gens)};
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Grammar: C<n> D<order> Q<order> SD<order> S<n> A<n> H<p>, joined by `x`;
/// or `perm:(1 2 3)(4 5),(1 2)`. Throws ParseError.
GroupSpec parse_group_spec(std::string_view text);

/// Canonical text form; parse_group_spec(to_string(s)) == s.
std::string to_string(const GroupSpec& spec);

/// Throws LimitError above 256 elements, PreconditionError on invalid specs.
GroupTable build_group(const GroupSpec& spec);

bool is_prime(std::uint64_t n);

}  // namespace artinx
