#include "artinx/artinx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>

#include "artin.hpp"
#include "burnside.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "report.hpp"
#include "sweep.hpp"

struct artinx_group {
  std::string spec;
  artinx::GroupTable table;
  artinx::SubgroupLattice lattice;
  artinx::MarkTable marks;
};

namespace {

thread_local std::string g_last_error;

artinx_status fail(artinx_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

// Maps exceptions thrown by the core onto status codes.
template <typename Fn>
artinx_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const artinx::ParseError& e) {
    return fail(ARTINX_ERR_PARSE, e.what());
  } catch (const artinx::LimitError& e) {
    return fail(ARTINX_ERR_LIMIT, e.what());
  } catch (const artinx::PreconditionError& e) {
    return fail(ARTINX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARTINX_ERR_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARTINX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ARTINX_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

artinx::Family to_family(const artinx_group& g, const artinx_family* f) {
  if (!f || !f->classes) return artinx::Family::all_cyclic();
  std::vector<std::size_t> cls(f->classes, f->classes + f->count);
  artinx::Family fam = artinx::Family::explicit_classes(std::move(cls));
  artinx::family_mask(g.lattice, fam);  // validates
  return fam;
}

artinx::Method to_method(artinx_method m) {
  switch (m) {
    case ARTINX_METHOD_BOTH: return artinx::Method::Both;
    case ARTINX_METHOD_CONGRUENCE: return artinx::Method::Congruence;
    case ARTINX_METHOD_MARKS: return artinx::Method::Marks;
  }
  throw artinx::PreconditionError("unknown method");
}

}  // namespace

extern "C" {

const char* artinx_version(void) { return "0.1.0"; }

const char* artinx_last_error(void) { return g_last_error.c_str(); }

const char* artinx_status_string(artinx_status status) {
  switch (status) {
    case ARTINX_OK: return "ok";
    case ARTINX_ERR_PARSE: return "parse error";
    case ARTINX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ARTINX_ERR_LIMIT: return "limit exceeded";
    case ARTINX_ERR_METHOD_DISAGREEMENT: return "method disagreement";
    case ARTINX_ERR_CHECK_FAILED: return "check failed";
    case ARTINX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void artinx_string_free(char* s) { std::free(s); }

artinx_status artinx_group_create(const char* spec, const char* cache_dir, artinx_group** out) {
  if (!spec || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const artinx::GroupSpec parsed = artinx::parse_group_spec(spec);
    const std::string canonical = artinx::to_string(parsed);
    artinx::GroupTable table = artinx::build_group(parsed);
    artinx::SubgroupLattice lattice =
        artinx::cached_lattice(canonical, table, cache_dir ? std::string(cache_dir) : std::string());
    artinx::MarkTable marks = artinx::build_mark_table(table, lattice);
    *out = new artinx_group{canonical, std::move(table), std::move(lattice), std::move(marks)};
    return ARTINX_OK;
  });
}

void artinx_group_destroy(artinx_group* group) { delete group; }

artinx_status artinx_group_order(const artinx_group* group, uint32_t* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = static_cast<uint32_t>(group->table.order());
  return ARTINX_OK;
}

artinx_status artinx_group_class_count(const artinx_group* group, uint32_t* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = static_cast<uint32_t>(group->lattice.size());
  return ARTINX_OK;
}

artinx_status artinx_group_subgroup_count(const artinx_group* group, uint32_t* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = static_cast<uint32_t>(group->lattice.subgroup_count());
  return ARTINX_OK;
}

artinx_status artinx_group_is_cyclic(const artinx_group* group, int* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = group->lattice[group->lattice.size() - 1].is_cyclic() ? 1 : 0;
  return ARTINX_OK;
}

artinx_status artinx_group_class_info(const artinx_group* group, uint32_t cls, uint32_t* order,
                                      uint32_t* conjugates, int* is_cyclic) {
  if (!group) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  if (cls >= group->lattice.size()) return fail(ARTINX_ERR_INVALID_ARGUMENT, "class index out of range");
  const auto& c = group->lattice[cls];
  if (order) *order = static_cast<uint32_t>(c.order());
  if (conjugates) *conjugates = static_cast<uint32_t>(c.size());
  if (is_cyclic) *is_cyclic = c.is_cyclic() ? 1 : 0;
  return ARTINX_OK;
}

artinx_status artinx_mark(const artinx_group* group, uint32_t u_class, uint32_t v_class, int64_t* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = artinx::mark(group->table, group->lattice, u_class, v_class);
    return ARTINX_OK;
  });
}

artinx_status artinx_conductor(const artinx_group* group, uint64_t* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = artinx::conductor(group->marks);
    return ARTINX_OK;
  });
}

artinx_status artinx_exponent(const artinx_group* group, const artinx_family* family, artinx_method method,
                              uint64_t* out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const artinx::Family fam = to_family(*group, family);
    const artinx::Method m = to_method(method);
    std::optional<std::uint64_t> ec, em;
    if (m != artinx::Method::Marks) ec = artinx::artin_exponent_congruence(group->table, group->lattice, fam);
    if (m != artinx::Method::Congruence)
      em = artinx::artin_exponent_marks(group->table, group->lattice, group->marks, fam);
    *out = ec ? *ec : *em;
    if (ec && em && *ec != *em)
      return fail(ARTINX_ERR_METHOD_DISAGREEMENT,
                  "congruence method gives " + std::to_string(*ec) + ", marks method gives " + std::to_string(*em));
    return ARTINX_OK;
  });
}

artinx_status artinx_report(const artinx_group* group, const artinx_family* family, artinx_method method,
                            int audit, artinx_format format, char** out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const artinx::ExponentReport r = artinx::compute_report(group->spec, group->table, group->lattice, &group->marks,
                                                            to_family(*group, family), to_method(method));
    const std::string text = format == ARTINX_FORMAT_JSON ? artinx::report_to_json(r, group->lattice, audit != 0)
                                                          : artinx::report_to_text(r, group->lattice, audit != 0);
    *out = dup_string(text);
    if (!r.methods_agree())
      return fail(ARTINX_ERR_METHOD_DISAGREEMENT, "congruence method gives " +
                                                      std::to_string(*r.exponent_congruence) +
                                                      ", marks method gives " + std::to_string(*r.exponent_marks));
    return ARTINX_OK;
  });
}

artinx_status artinx_marks_render(const artinx_group* group, artinx_format format, char** out) {
  if (!group || !out) return fail(ARTINX_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup_string(format == ARTINX_FORMAT_JSON ? artinx::marks_to_json(group->spec, group->lattice, group->marks)
                                                   : artinx::marks_to_text(group->spec, group->lattice, group->marks));
    return ARTINX_OK;
  });
}

artinx_status artinx_sweep(const artinx_sweep_options* options, char** text_out, char** json_out,
                           uint32_t* failure_count) {
  if (text_out) *text_out = nullptr;
  if (json_out) *json_out = nullptr;
  return guarded([&] {
    artinx::SweepConfig cfg;
    bool timings = false;
    if (options) {
      if (options->max_order) cfg.max_order = options->max_order;
      cfg.checks = artinx::parse_checks(options->checks ? options->checks : "");
      cfg.jobs = options->jobs ? options->jobs : 1;
      timings = options->timings != 0;
      if (options->cache_dir) cfg.cache_dir = options->cache_dir;
    }
    if (cfg.max_order > artinx::kMaxOrder) throw artinx::PreconditionError("max_order must be <= 256");
    const artinx::RunResult r = artinx::run_sweep(cfg);
    if (text_out) *text_out = dup_string(artinx::sweep_to_text(r, cfg, timings));
    if (json_out) *json_out = dup_string(artinx::sweep_to_json(r, cfg, timings));
    if (failure_count) *failure_count = static_cast<uint32_t>(r.failures.size());
    if (!r.ok()) return fail(ARTINX_ERR_CHECK_FAILED, std::to_string(r.failures.size()) + " check failure(s)");
    return ARTINX_OK;
  });
}

}  // extern "C"
