#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "group.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace artinx {

/// Table of marks: at(v, u) = number of cosets of V_v fixed by U_u.
/// Rows are transitive G-sets [G/V], columns are mark homomorphisms.
/// Lower-triangular in lattice class order.
class MarkTable {
 public:
  MarkTable(std::size_t n, std::vector<std::int64_t> marks);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] std::int64_t at(std::size_t v, std::size_t u) const { return m_[v * n_ + u]; }
  [[nodiscard]] const std::vector<std::int64_t>& data() const { return m_; }
  /// Nonzero entries (v, m[v][u]) of column u strictly below the diagonal.
  [[nodiscard]] const std::vector<std::pair<std::uint32_t, std::int64_t>>& column_below(std::size_t u) const {
    return below_[u];
  }

 private:
  std::size_t n_;
  std::vector<std::int64_t> m_;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> below_;
};

using GhostVector = std::vector<std::int64_t>;

/// Coefficients over the transitive basis [G/V], in lattice class order.
struct BurnsideElement {
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
};

struct NotIntegral {
  std::size_t class_index;  // first non-integral coefficient met by back-substitution
  std::int64_t denominator;
  friend bool operator==(const NotIntegral&, const NotIntegral&) = default;
};

using MembershipResult = std::variant<BurnsideElement, NotIntegral>;

std::int64_t mark(const GroupTable& g, const SubgroupLattice& lat, std::size_t u_class, std::size_t v_class);

MarkTable build_mark_table(const GroupTable& g, const SubgroupLattice& lat);

GhostVector ghost_of(const MarkTable& table, const BurnsideElement& x);

BurnsideElement basis_element(std::size_t n, std::size_t v_class);

/// Exact rational coefficients c with ghost_of(c) = target.
std::vector<Rational> solve_exact(const MarkTable& table, const GhostVector& target);

MembershipResult solve_membership(const MarkTable& table, const GhostVector& target);

/// Least n >= 1 with n * (ghost ring) inside the image of B(G).
std::uint64_t conductor(const MarkTable& table);

/// Orbit decomposition of (G/U) x (G/V).
BurnsideElement multiply_basis(const GroupTable& g, const SubgroupLattice& lat, std::size_t u_class,
                               std::size_t v_class);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace artinx
