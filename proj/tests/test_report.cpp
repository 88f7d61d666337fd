#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "errors.hpp"
#include "report.hpp"
#include "sweep.hpp"

using namespace artinx;
using nlohmann::json;

namespace {

struct Built {
  std::string spec;
  GroupTable g;
  SubgroupLattice lat;
  MarkTable marks;
  explicit Built(const char* s)
      : spec(s), g(build_group(parse_group_spec(s))), lat(enumerate_subgroups(g)), marks(build_mark_table(g, lat)) {}
  ExponentReport report(Method m = Method::Both) const {
    return compute_report(spec, g, lat, &marks, Family::all_cyclic(), m);
  }
};

bool in_catalog(const std::vector<GroupSpec>& cat, const char* s) {
  return std::find(cat.begin(), cat.end(), parse_group_spec(s)) != cat.end();
}

}  // namespace

TEST_CASE("exponent report JSON") {
  const Built b("S3");
  const ExponentReport r = b.report();
  CHECK(r.exponent() == 2);
  CHECK(r.methods_agree());
  CHECK(r.divides_order());
  const json j = json::parse(report_to_json(r, b.lat, true));
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "exponent_report");
  CHECK(j["exponent"] == 2);
  CHECK(j["exponent_congruence"] == 2);
  CHECK(j["exponent_marks"] == 2);
  CHECK(j["methods_agree"] == true);
  CHECK(j["predictor"]["branch"] == "not a p-group");
  REQUIRE(j["binding_pairs"].size() == 1);
  CHECK(j["binding_pairs"][0]["u_label"] == "C3");
  CHECK(j["binding_pairs"][0]["constraint"] == 2);
  CHECK(j["pairs"].size() == 3);
  CHECK_FALSE(json::parse(report_to_json(r, b.lat, false)).contains("pairs"));
  // Deterministic output.
  CHECK(report_to_json(b.report(), b.lat, true) == report_to_json(r, b.lat, true));
}

TEST_CASE("single-method reports") {
  const Built b("Q8");
  const ExponentReport c = b.report(Method::Congruence);
  CHECK(c.exponent_congruence == 2u);
  CHECK_FALSE(c.exponent_marks.has_value());
  const ExponentReport m = b.report(Method::Marks);
  CHECK(m.exponent_marks == 2u);
  CHECK_FALSE(m.exponent_congruence.has_value());
  CHECK(m.exponent() == 2);
}

TEST_CASE("report text lists the binding pair") {
  const Built b("S3");
  const std::string text = report_to_text(b.report(), b.lat, true);
  CHECK(text.find("exponent   2") != std::string::npos);
  CHECK(text.find("* C3") != std::string::npos);
}

TEST_CASE("mark table rendering") {
  const Built b("S3");
  const json j = json::parse(marks_to_json(b.spec, b.lat, b.marks));
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "mark_table");
  CHECK(j["marks"] == json::parse("[[6,0,0,0],[3,1,0,0],[2,0,2,0],[1,1,1,1]]"));
  CHECK(j["class_labels"] == json::parse(R"(["C1","C2*3","C3","N6"])"));
  const std::string text = marks_to_text(b.spec, b.lat, b.marks);
  CHECK(text.find("C2*3") != std::string::npos);
}

TEST_CASE("parse_checks") {
  CHECK(parse_checks("all") == all_checks());
  CHECK(parse_checks("") == all_checks());
  CHECK(parse_checks("oddp,cyclic") == std::vector<Check>{Check::Cyclic, Check::OddP});
  CHECK_THROWS_AS(parse_checks("cyclic,bogus"), ParseError);
}

TEST_CASE("default catalog") {
  const auto cat = default_catalog(64);
  for (const char* s : {"C1", "C64", "C2xC2", "C4xC4xC4", "C2xC2xC16", "D8", "D64", "Q8", "Q64", "SD16", "SD64", "S3",
                        "A4", "S4", "H3", "C3xC3xC3", "C5xC5", "C7xC7", "C3xC9"})
    CHECK_MESSAGE(in_catalog(cat, s), s);
  CHECK_FALSE(in_catalog(cat, "Q128"));
  for (const auto& s : cat) CHECK(build_group(s).order() <= 64);
  // Every entry parses back from its canonical form.
  for (const auto& s : cat) CHECK(parse_group_spec(to_string(s)) == s);
}

TEST_CASE("sweep: determinism across worker counts") {
  SweepConfig cfg;
  cfg.max_order = 24;
  cfg.jobs = 1;
  const RunResult one = run_sweep(cfg);
  cfg.jobs = 3;
  const RunResult three = run_sweep(cfg);
  CHECK(one.ok());
  CHECK(sweep_to_json(one, cfg, false) == sweep_to_json(three, cfg, false));
  const json j = json::parse(sweep_to_json(one, cfg, false));
  CHECK(j["schema"] == 1);
  CHECK(j["ok"] == true);
  CHECK_FALSE(j.contains("timings"));
  CHECK(json::parse(sweep_to_json(one, cfg, true)).contains("timings"));
}

TEST_CASE("sweep: odd p-group suite") {
  SweepConfig cfg;
  cfg.max_order = 27;
  cfg.checks = {Check::OddP};
  const RunResult r = run_sweep(cfg);
  CHECK(r.ok());
  for (const auto& g : r.groups) {
    if (g.group == "C3xC3") CHECK(g.exponent == 3);
    if (g.group == "C3xC9" || g.group == "C9xC3") CHECK(g.exponent == 9);
    if (g.group == "H3") CHECK(g.exponent == 9);
  }
}

TEST_CASE("sweep: sylow suite is report-only") {
  SweepConfig cfg;
  cfg.max_order = 16;
  cfg.checks = {Check::Sylow};
  const RunResult r = run_sweep(cfg);
  CHECK(r.ok());
  const auto it = std::find_if(r.groups.begin(), r.groups.end(), [](const GroupResult& g) { return g.group == "S3"; });
  REQUIRE(it != r.groups.end());
  CHECK(it->outcomes.at(Check::Sylow).status == Status::Report);
  CHECK(it->outcomes.at(Check::Sylow).detail.find("mismatch") != std::string::npos);
}
