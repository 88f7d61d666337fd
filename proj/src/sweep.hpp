#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "group.hpp"

namespace artinx {

enum class Check { Cyclic, OddP, TwoGroup, Conductor, Lemmas, CrossMethod, Sylow };

const std::vector<Check>& all_checks();
std::string to_string(Check c);
/// Comma-separated list, e.g. "cyclic,oddp"; "all" or empty selects every suite.
std::vector<Check> parse_checks(const std::string& text);

struct SweepConfig {
  unsigned max_order = 64;
  std::vector<GroupSpec> catalog;  // empty: built-in catalog for max_order
  std::vector<Check> checks = all_checks();
  unsigned jobs = 1;
  std::string cache_dir;
  std::uint64_t seed = 20240917;
  unsigned random_families = 20;
  unsigned relabelings = 10;
};

enum class Status { Pass, Fail, Report, NotApplicable };
std::string to_string(Status s);

struct CheckOutcome {
  Status status = Status::NotApplicable;
  std::string detail;
};

struct GroupResult {
  std::string group;
  std::size_t order = 0;
  bool cyclic = false;
  std::uint64_t exponent = 0;
  std::string error;  // non-empty if the group could not be processed
  std::map<Check, CheckOutcome> outcomes;
  double seconds = 0;
};

struct Failure {
  std::string group;
  std::string check;
  std::string expected;
  std::string got;
};

struct RunResult {
  std::vector<GroupResult> groups;
  std::vector<Failure> failures;
  double seconds = 0;
  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Cyclic groups, abelian products of two and three cyclic factors, D/Q/SD families,
/// S3, S4, A4 and H3, restricted to order <= max_order.
std::vector<GroupSpec> default_catalog(unsigned max_order);

/// Runs the selected suites for one group. Throws on construction errors.
GroupResult run_checks(const GroupSpec& spec, const SweepConfig& config);

RunResult run_sweep(const SweepConfig& config);

std::string sweep_to_json(const RunResult& r, const SweepConfig& config, bool timings);
std::string sweep_to_text(const RunResult& r, const SweepConfig& config, bool timings);

}  // namespace artinx
