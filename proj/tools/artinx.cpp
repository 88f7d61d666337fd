// artinx command-line front end. Talks to the library only through artinx.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "artinx/artinx.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct GroupDeleter {
  void operator()(artinx_group* g) const { artinx_group_destroy(g); }
};
using GroupHandle = std::unique_ptr<artinx_group, GroupDeleter>;

struct StringDeleter {
  void operator()(char* s) const { artinx_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(artinx_status s) {
  switch (s) {
    case ARTINX_OK: return kExitOk;
    case ARTINX_ERR_METHOD_DISAGREEMENT:
    case ARTINX_ERR_CHECK_FAILED: return kExitCheckFailed;
    default: return kExitUsage;
  }
}

int report_error(artinx_status s) {
  std::cerr << "artinx: " << artinx_status_string(s) << ": " << artinx_last_error() << "\n";
  return exit_code_for(s);
}

std::string default_cache_dir() {
  const char* env = std::getenv("ARTINX_CACHE_DIR");
  return env ? env : "";
}

std::optional<std::vector<uint32_t>> parse_class_list(const std::string& text) {
  std::vector<uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) return std::nullopt;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != item.size() || v > UINT32_MAX) return std::nullopt;
    out.push_back(static_cast<uint32_t>(v));
  }
  return out;
}

struct ComputeArgs {
  std::string group;
  std::string family = "cyclic";
  std::string family_classes;
  std::string method = "both";
  bool json = false;
  bool audit = false;
  std::string cache = default_cache_dir();
};

int cmd_compute(const ComputeArgs& a) {
  artinx_method method = ARTINX_METHOD_BOTH;
  if (a.method == "congruence") method = ARTINX_METHOD_CONGRUENCE;
  else if (a.method == "marks") method = ARTINX_METHOD_MARKS;

  std::vector<uint32_t> classes;
  artinx_family family{nullptr, 0};
  if (!a.family_classes.empty()) {
    const auto parsed = parse_class_list(a.family_classes);
    if (!parsed) {
      std::cerr << "artinx: --family-classes expects a comma-separated list of class indices\n";
      return kExitUsage;
    }
    classes = *parsed;
    family = {classes.data(), classes.size()};
  }

  artinx_group* raw = nullptr;
  if (const auto s = artinx_group_create(a.group.c_str(), a.cache.c_str(), &raw); s != ARTINX_OK)
    return report_error(s);
  GroupHandle group(raw);

  char* out = nullptr;
  const auto s = artinx_report(group.get(), a.family_classes.empty() ? nullptr : &family, method, a.audit ? 1 : 0,
                               a.json ? ARTINX_FORMAT_JSON : ARTINX_FORMAT_TEXT, &out);
  OwnedString text(out);
  if (text) std::cout << text.get();
  if (s != ARTINX_OK) return report_error(s);
  return kExitOk;
}

int cmd_marks(const std::string& spec, bool json, const std::string& cache) {
  artinx_group* raw = nullptr;
  if (const auto s = artinx_group_create(spec.c_str(), cache.c_str(), &raw); s != ARTINX_OK) return report_error(s);
  GroupHandle group(raw);
  char* out = nullptr;
  const auto s = artinx_marks_render(group.get(), json ? ARTINX_FORMAT_JSON : ARTINX_FORMAT_TEXT, &out);
  OwnedString text(out);
  if (s != ARTINX_OK) return report_error(s);
  std::cout << text.get();
  return kExitOk;
}

struct SweepArgs {
  uint32_t max_order = 64;
  std::string checks = "all";
  uint32_t jobs = 1;
  std::string json_path;
  bool timings = false;
  std::string cache = default_cache_dir();
};

int cmd_sweep(const SweepArgs& a) {
  artinx_sweep_options opts{a.max_order, a.checks.c_str(), a.jobs, a.timings ? 1 : 0, a.cache.c_str()};
  char* text = nullptr;
  char* json = nullptr;
  uint32_t failures = 0;
  const auto s = artinx_sweep(&opts, &text, a.json_path.empty() ? nullptr : &json, &failures);
  OwnedString text_owner(text), json_owner(json);
  if (s != ARTINX_OK && s != ARTINX_ERR_CHECK_FAILED) return report_error(s);
  std::cout << text_owner.get();
  if (json_owner) {
    if (a.json_path == "-") {
      std::cout << json_owner.get();
    } else {
      std::ofstream f(a.json_path);
      if (!f) {
        std::cerr << "artinx: cannot write " << a.json_path << "\n";
        return kExitUsage;
      }
      f << json_owner.get();
    }
  }
  return s == ARTINX_OK ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"artinx: Burnside rings, tables of marks and Artin exponents of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(artinx_version()));

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Artin exponent of one group");
  c->add_option("--group,-g", compute.group, "group spec, e.g. Q8, C2xC4, perm:(1 2),(1 2 3)")->required();
  auto* fam = c->add_option("--family", compute.family, "family of subgroup classes")
                  ->check(CLI::IsMember({"cyclic"}));
  c->add_option("--family-classes", compute.family_classes, "explicit class indices, comma-separated")
      ->excludes(fam);
  c->add_option("--method", compute.method, "both | congruence | marks")
      ->check(CLI::IsMember({"both", "congruence", "marks"}));
  c->add_flag("--json", compute.json, "emit the report as JSON");
  c->add_flag("--audit", compute.audit, "list every congruence pair and mark the binding ones");
  c->add_option("--cache", compute.cache, "lattice cache directory (default $ARTINX_CACHE_DIR)");

  std::string marks_group;
  bool marks_json = false;
  std::string marks_cache = default_cache_dir();
  auto* m = app.add_subcommand("marks", "print the table of marks");
  m->add_option("--group,-g", marks_group, "group spec")->required();
  m->add_flag("--json", marks_json, "emit JSON");
  m->add_option("--cache", marks_cache, "lattice cache directory (default $ARTINX_CACHE_DIR)");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "run the check suites over the built-in catalog");
  s->add_option("--max-order", sweep.max_order, "largest group order in the catalog")->check(CLI::Range(1, 256));
  s->add_option("--checks", sweep.checks, "cyclic,oddp,twogroup,conductor,lemmas,crossmethod,sylow or all");
  s->add_option("--jobs,-j", sweep.jobs, "worker threads")->check(CLI::Range(1, 256));
  s->add_option("--json", sweep.json_path, "write the JSON summary to this file ('-' for stdout)");
  s->add_flag("--timings", sweep.timings, "add per-group timings (kept out of the data section)");
  s->add_option("--cache", sweep.cache, "lattice cache directory (default $ARTINX_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (c->parsed()) return cmd_compute(compute);
  if (m->parsed()) return cmd_marks(marks_group, marks_json, marks_cache);
  if (s->parsed()) return cmd_sweep(sweep);
  return kExitUsage;
}
