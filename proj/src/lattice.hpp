#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "element_set.hpp"
#include "group.hpp"
#include "subgroup.hpp"

namespace artinx {

struct SubgroupClass {
  Subgroup representative;          // lexicographically least conjugate
  std::vector<Subgroup> conjugates; // includes the representative, lex-sorted
  std::size_t normalizer_index = 1; // |G : N_G(rep)|

  [[nodiscard]] std::size_t order() const { return representative.order; }
  [[nodiscard]] bool is_cyclic() const { return representative.is_cyclic; }
  [[nodiscard]] std::size_t size() const { return conjugates.size(); }
};

/// All subgroups of a group, grouped into conjugacy classes sorted by
/// (order, representative bits). Class 0 is trivial, the last class is G.
class SubgroupLattice {
 public:
  SubgroupLattice(std::size_t group_order, std::vector<SubgroupClass> classes);

  [[nodiscard]] const std::vector<SubgroupClass>& classes() const { return classes_; }
  [[nodiscard]] const SubgroupClass& operator[](std::size_t i) const { return classes_[i]; }
  [[nodiscard]] std::size_t size() const { return classes_.size(); }
  [[nodiscard]] std::size_t group_order() const { return group_order_; }
  [[nodiscard]] std::size_t subgroup_count() const { return subgroup_count_; }

  [[nodiscard]] std::optional<std::size_t> class_of(const ElementSet& members) const;
  /// Class index of a set known to be a subgroup; throws if absent.
  [[nodiscard]] std::size_t class_index(const ElementSet& members) const;

  /// Visits every subgroup once, with its class index.
  template <typename Fn>
  void for_each_subgroup(Fn&& fn) const {
    for (std::size_t c = 0; c < classes_.size(); ++c)
      for (const auto& s : classes_[c].conjugates) fn(c, s);
  }

  /// "C4*3": order-4 cyclic class with 3 conjugates ("N" for noncyclic).
  [[nodiscard]] std::string class_label(std::size_t c) const;

 private:
  std::size_t group_order_;
  std::vector<SubgroupClass> classes_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> class_of_;
  std::size_t subgroup_count_ = 0;
};

struct LatticeOptions {
  std::size_t max_subgroups = 100000;
};

/// Throws LimitError when the subgroup count exceeds `options.max_subgroups`.
SubgroupLattice enumerate_subgroups(const GroupTable& g, const LatticeOptions& options = {});

/// Builds a class (conjugates, normalizer index, canonical representative) from one member.
SubgroupClass conjugacy_class_of(const GroupTable& g, const Subgroup& s);

// Lattice cache: versioned JSON keyed by the group-spec string.
std::string lattice_to_json(const std::string& spec, const GroupTable& g, const SubgroupLattice& lat);
/// Rebuilds a lattice from cached JSON; throws std::runtime_error when the
/// cache does not match `g` (order, class count, normalizer data).
SubgroupLattice lattice_from_json(const std::string& spec, const GroupTable& g, const std::string& json);

/// Loads from `cache_dir` if a valid entry exists, otherwise enumerates and writes it.
/// An empty `cache_dir` disables caching.
SubgroupLattice cached_lattice(const std::string& spec, const GroupTable& g,
                               const std::string& cache_dir, const LatticeOptions& options = {});

std::string cache_file_name(const std::string& spec);

}  // namespace artinx
