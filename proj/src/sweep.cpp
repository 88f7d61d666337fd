#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "artin.hpp"
#include "burnside.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "lattice.hpp"

namespace artinx {

const std::vector<Check>& all_checks() {
  static const std::vector<Check> kAll{Check::Cyclic,      Check::OddP,       Check::TwoGroup, Check::Conductor,
                                       Check::Lemmas,      Check::CrossMethod, Check::Sylow};
  return kAll;
}

std::string to_string(Check c) {
  switch (c) {
    case Check::Cyclic: return "cyclic";
    case Check::OddP: return "oddp";
    case Check::TwoGroup: return "twogroup";
    case Check::Conductor: return "conductor";
    case Check::Lemmas: return "lemmas";
    case Check::CrossMethod: return "crossmethod";
    case Check::Sylow: return "sylow";
  }
  return "?";
}

std::vector<Check> parse_checks(const std::string& text) {
  if (text.empty() || text == "all") return all_checks();
  std::vector<Check> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool found = false;
    for (Check c : all_checks()) {
      if (to_string(c) == item) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
        found = true;
      }
    }
    if (!found) throw ParseError("unknown check suite '" + item + "'");
  }
  if (out.empty()) throw ParseError("no check suites selected");
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Report: return "report";
    case Status::NotApplicable: return "n/a";
  }
  return "?";
}

std::vector<GroupSpec> default_catalog(unsigned max_order) {
  if (max_order > kMaxOrder) throw PreconditionError("max_order must be <= 256");
  std::vector<GroupSpec> out;
  for (unsigned n = 1; n <= max_order; ++n) out.push_back(GroupSpec::cyclic(n));
  for (unsigned a = 2; a * a <= max_order; ++a)
    for (unsigned b = a; a * b <= max_order; ++b)
      out.push_back(GroupSpec::product({GroupSpec::cyclic(a), GroupSpec::cyclic(b)}));
  for (unsigned a = 2; a * a * a <= max_order; ++a)
    for (unsigned b = a; a * b * b <= max_order; ++b)
      for (unsigned c = b; a * b * c <= max_order; ++c)
        out.push_back(GroupSpec::product({GroupSpec::cyclic(a), GroupSpec::cyclic(b), GroupSpec::cyclic(c)}));
  for (unsigned n = 4; n <= max_order; n += 2) out.push_back(GroupSpec::dihedral(n));
  for (unsigned n = 8; n <= max_order; n *= 2) out.push_back(GroupSpec::quaternion(n));
  for (unsigned n = 16; n <= max_order; n *= 2) out.push_back(GroupSpec::semidihedral(n));
  if (max_order >= 6) out.push_back(GroupSpec::symmetric(3));
  if (max_order >= 12) out.push_back(GroupSpec::alternating(4));
  if (max_order >= 24) out.push_back(GroupSpec::symmetric(4));
  if (max_order >= 27) out.push_back(GroupSpec::heisenberg(3));
  return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool selected(const SweepConfig& cfg, Check c) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end();
}

CheckOutcome verdict(bool ok, std::string detail) {
  return {ok ? Status::Pass : Status::Fail, std::move(detail)};
}

std::string join_first(const std::vector<std::string>& v, std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) out += "; ";
    out += v[i];
  }
  if (v.size() > limit) out += "; ... (" + std::to_string(v.size()) + " total)";
  return out;
}

}  // namespace

GroupResult run_checks(const GroupSpec& spec, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  GroupResult res;
  res.group = to_string(spec);
  const GroupTable g = build_group(spec);
  res.order = g.order();
  const SubgroupLattice lat = cached_lattice(res.group, g, config.cache_dir);
  res.cyclic = lat[lat.size() - 1].is_cyclic();

  const Family cyc = Family::all_cyclic();
  const std::vector<CongruencePair> pairs = congruence_pairs(g, lat, cyc);
  const std::uint64_t a = exponent_from_pairs(pairs);
  res.exponent = a;

  std::optional<MarkTable> table;
  auto marks = [&]() -> const MarkTable& {
    if (!table) table.emplace(build_mark_table(g, lat));
    return *table;
  };
  const auto pp = prime_power(g.order());

  if (selected(config, Check::Cyclic)) {
    const bool ok = (a == 1) == res.cyclic;
    res.outcomes[Check::Cyclic] =
        verdict(ok, std::string(res.cyclic ? "cyclic" : "noncyclic") + ", A = " + std::to_string(a));
  }

  if (selected(config, Check::OddP)) {
    if (pp && pp->first != 2 && !res.cyclic) {
      std::uint64_t expected = 1;
      for (unsigned i = 1; i < pp->second; ++i) expected *= pp->first;
      res.outcomes[Check::OddP] =
          verdict(a == expected, "expected " + std::to_string(expected) + ", got " + std::to_string(a));
    }
  }

  if (selected(config, Check::TwoGroup)) {
    if (pp && pp->first == 2 && !res.cyclic) {
      const Prediction pred = closed_form_predictor(g, lat);
      const TwoGroupKind kind = recognize_2group(g);
      std::uint64_t half = g.order() / 2;
      CheckOutcome out;
      if (kind == TwoGroupKind::Dihedral || (kind == TwoGroupKind::Quaternion && g.order() == 8)) {
        out = verdict(a == 2, to_string(kind) + ": expected 2, got " + std::to_string(a));
      } else if (kind == TwoGroupKind::Other) {
        out = verdict(a == half, "expected 2^(a-1) = " + std::to_string(half) + ", got " + std::to_string(a));
      } else {
        std::ostringstream os;
        os << to_string(kind) << ": got " << a << "; Q/D-exception formula " << *pred.two_group_formula
           << (*pred.two_group_formula == a ? " agrees" : " disagrees") << "; index-two formula "
           << *pred.index_two_formula << (*pred.index_two_formula == a ? " agrees" : " disagrees")
           << " (report-only)";
        out = {Status::Report, os.str()};
      }
      res.outcomes[Check::TwoGroup] = out;
    }
  }

  if (selected(config, Check::Conductor)) {
    const std::uint64_t c = conductor(marks());
    res.outcomes[Check::Conductor] =
        verdict(c == g.order(), "conductor " + std::to_string(c) + ", order " + std::to_string(g.order()));
  }

  if (selected(config, Check::Lemmas)) {
    CheckTally t = check_counting_lemmas(g, lat);
    t.merge(check_centralizer_divisibility(g, pairs, a));
    t.merge(check_central_reduction(g, lat, pairs));
    res.outcomes[Check::Lemmas] =
        verdict(t.ok(), t.ok() ? std::to_string(t.checked) + " instances" : join_first(t.violations, 3));
  }

  if (selected(config, Check::CrossMethod)) {
    std::vector<std::string> bad;
    const std::uint64_t am = artin_exponent_marks(g, lat, marks(), cyc);
    if (am != a) bad.push_back("cyclic family: congruence " + std::to_string(a) + " vs marks " + std::to_string(am));
    if (g.order() % a != 0) bad.push_back("A = " + std::to_string(a) + " does not divide |G|");
    std::mt19937_64 rng(config.seed ^ fnv1a(res.group));
    std::bernoulli_distribution coin(0.5);
    for (unsigned k = 0; k < config.random_families; ++k) {
      std::vector<std::size_t> cls;
      for (std::size_t c = 0; c < lat.size(); ++c)
        if (coin(rng)) cls.push_back(c);
      const Family f = Family::explicit_classes(cls);
      const std::uint64_t ec = artin_exponent_congruence(g, lat, f);
      const std::uint64_t em = artin_exponent_marks(g, lat, marks(), f);
      if (ec != em || g.order() % ec != 0)
        bad.push_back("random family #" + std::to_string(k) + ": congruence " + std::to_string(ec) + " vs marks " +
                      std::to_string(em));
    }
    for (unsigned k = 0; k < config.relabelings; ++k) {
      const GroupTable h = g.relabeled(random_relabeling(g.order(), rng));
      const SubgroupLattice hl = enumerate_subgroups(h);
      const std::uint64_t ah = artin_exponent_congruence(h, hl, cyc);
      if (ah != a || hl.size() != lat.size())
        bad.push_back("relabeling #" + std::to_string(k) + " changed A to " + std::to_string(ah));
    }
    res.outcomes[Check::CrossMethod] =
        verdict(bad.empty(), bad.empty() ? "A = " + std::to_string(a) + ", " + std::to_string(config.random_families) +
                                               " random families agree"
                                         : join_first(bad, 3));
  }

  if (selected(config, Check::Sylow)) {
    std::ostringstream os;
    bool all_match = true;
    for (const auto& e : sylow_reduction_report(g, lat, cyc)) {
      os << "p=" << e.prime << ":" << e.exponent_part << "/" << e.sylow_exponent << " ";
      all_match = all_match && e.match;
    }
    os << (all_match ? "match" : "mismatch (report-only)");
    res.outcomes[Check::Sylow] = {Status::Report, os.str()};
  }

  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

RunResult run_sweep(const SweepConfig& config) {
  if (config.max_order > kMaxOrder) throw PreconditionError("max_order must be <= 256");
  const auto start = std::chrono::steady_clock::now();
  std::vector<GroupSpec> catalog = config.catalog.empty() ? default_catalog(config.max_order) : config.catalog;

  RunResult result;
  result.groups.resize(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < catalog.size(); i = next.fetch_add(1)) {
      try {
        result.groups[i] = run_checks(catalog[i], config);
      } catch (const std::exception& e) {
        result.groups[i].group = to_string(catalog[i]);
        result.groups[i].error = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& g : result.groups) {
    if (!g.error.empty()) result.failures.push_back({g.group, "build", "group processed", g.error});
    for (const auto& [check, outcome] : g.outcomes)
      if (outcome.status == Status::Fail) result.failures.push_back({g.group, to_string(check), "pass", outcome.detail});
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string sweep_to_json(const RunResult& r, const SweepConfig& config, bool timings) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = "sweep";
  j["max_order"] = config.max_order;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (Check c : config.checks) checks.push_back(to_string(c));
  auto& groups = j["groups"] = nlohmann::ordered_json::array();
  for (const auto& g : r.groups) {
    nlohmann::ordered_json gj;
    gj["group"] = g.group;
    gj["order"] = g.order;
    gj["cyclic"] = g.cyclic;
    gj["exponent"] = g.exponent;
    if (!g.error.empty()) gj["error"] = g.error;
    auto& res = gj["results"] = nlohmann::ordered_json::object();
    for (Check c : config.checks) {
      const auto it = g.outcomes.find(c);
      if (it == g.outcomes.end()) {
        res[to_string(c)] = {{"status", "n/a"}};
      } else {
        res[to_string(c)] = {{"status", to_string(it->second.status)}, {"detail", it->second.detail}};
      }
    }
    groups.push_back(std::move(gj));
  }
  auto& failures = j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"group", f.group}, {"check", f.check}, {"expected", f.expected}, {"got", f.got}});
  j["ok"] = r.ok();
  if (timings) {
    auto& t = j["timings"];
    t["total_seconds"] = r.seconds;
    auto& per = t["groups"] = nlohmann::ordered_json::object();
    for (const auto& g : r.groups) per[g.group] = g.seconds;
  }
  return j.dump(2) + "\n";
}

std::string sweep_to_text(const RunResult& r, const SweepConfig& config, bool timings) {
  std::size_t name_w = 8;
  for (const auto& g : r.groups) name_w = std::max(name_w, g.group.size() + 2);
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w)) << "group" << std::right << std::setw(6) << "order"
     << std::setw(8) << "A";
  for (Check c : config.checks) os << std::setw(13) << to_string(c);
  if (timings) os << std::setw(10) << "sec";
  os << "\n";
  for (const auto& g : r.groups) {
    os << std::left << std::setw(static_cast<int>(name_w)) << g.group << std::right << std::setw(6) << g.order
       << std::setw(8) << (g.error.empty() ? std::to_string(g.exponent) : "ERR");
    for (Check c : config.checks) {
      const auto it = g.outcomes.find(c);
      std::string cell = "-";
      if (it != g.outcomes.end()) {
        switch (it->second.status) {
          case Status::Pass: cell = "PASS"; break;
          case Status::Fail: cell = "FAIL"; break;
          case Status::Report:
            cell = it->second.detail.find("mismatch") != std::string::npos ||
                           it->second.detail.find("disagrees") != std::string::npos
                       ? "mismatch*"
                       : "report";
            break;
          case Status::NotApplicable: cell = "-"; break;
        }
      }
      os << std::setw(13) << cell;
    }
    if (timings) os << std::setw(10) << std::fixed << std::setprecision(3) << g.seconds;
    os << "\n";
  }
  os << "\n" << r.groups.size() << " groups, " << r.failures.size() << " failures";
  if (timings) os << ", " << std::fixed << std::setprecision(2) << r.seconds << " s";
  os << "\n";
  bool any_report = false;
  for (const auto& g : r.groups)
    for (const auto& [c, o] : g.outcomes)
      if (o.status == Status::Report && (o.detail.find("mismatch") != std::string::npos ||
                                         o.detail.find("disagrees") != std::string::npos)) {
        if (!any_report) os << "report-only notes (mismatch*):\n";
        any_report = true;
        os << "  " << g.group << " [" << to_string(c) << "] " << o.detail << "\n";
      }
  for (const auto& f : r.failures)
    os << "FAIL " << f.group << " [" << f.check << "] expected " << f.expected << ", got " << f.got << "\n";
  return os.str();
}

}  // namespace artinx
