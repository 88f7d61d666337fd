#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin.hpp"
#include "burnside.hpp"
#include "group.hpp"
#include "lattice.hpp"

namespace artinx {

enum class Method { Both, Congruence, Marks };

struct ExponentReport {
  std::string group;
  std::size_t order = 1;
  std::size_t class_count = 1;
  std::size_t subgroup_count = 1;
  Family family;
  Method method = Method::Both;
  std::optional<std::uint64_t> exponent_congruence;
  std::optional<std::uint64_t> exponent_marks;
  Prediction prediction;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> per_prime;  // (p, p-part of A)
  std::vector<CongruencePair> pairs;
  std::vector<std::size_t> binding;  // indices into pairs
  std::vector<SylowEntry> sylow;

  /// The agreed exponent (or the single computed one).
  [[nodiscard]] std::uint64_t exponent() const {
    return exponent_congruence ? *exponent_congruence : exponent_marks.value_or(0);
  }
  [[nodiscard]] bool methods_agree() const {
    return !exponent_congruence || !exponent_marks || *exponent_congruence == *exponent_marks;
  }
  [[nodiscard]] bool divides_order() const {
    const std::uint64_t e = exponent();
    return e != 0 && order % e == 0;
  }
};

ExponentReport compute_report(const std::string& spec, const GroupTable& g, const SubgroupLattice& lat,
                              const MarkTable* table, const Family& family, Method method);

std::string report_to_json(const ExponentReport& r, const SubgroupLattice& lat, bool audit);
std::string report_to_text(const ExponentReport& r, const SubgroupLattice& lat, bool audit);

std::string marks_to_json(const std::string& spec, const SubgroupLattice& lat, const MarkTable& table);
std::string marks_to_text(const std::string& spec, const SubgroupLattice& lat, const MarkTable& table);

std::string to_string(Method m);

}  // namespace artinx
