// Exercises the public C interface only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "artinx/artinx.h"

namespace {

artinx_group* open(const char* spec) {
  artinx_group* g = nullptr;
  REQUIRE(artinx_group_create(spec, nullptr, &g) == ARTINX_OK);
  REQUIRE(g != nullptr);
  return g;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  artinx_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::strlen(artinx_version()) > 0);
  CHECK(std::string(artinx_status_string(ARTINX_OK)) == "ok");
  CHECK(std::string(artinx_status_string(ARTINX_ERR_PARSE)) == "parse error");
}

TEST_CASE("group handle queries") {
  artinx_group* g = open("S3");
  uint32_t order = 0, classes = 0, subgroups = 0;
  int cyclic = -1;
  CHECK(artinx_group_order(g, &order) == ARTINX_OK);
  CHECK(artinx_group_class_count(g, &classes) == ARTINX_OK);
  CHECK(artinx_group_subgroup_count(g, &subgroups) == ARTINX_OK);
  CHECK(artinx_group_is_cyclic(g, &cyclic) == ARTINX_OK);
  CHECK(order == 6);
  CHECK(classes == 4);
  CHECK(subgroups == 6);
  CHECK(cyclic == 0);

  uint32_t cls_order = 0, conj = 0;
  int cls_cyclic = 0;
  CHECK(artinx_group_class_info(g, 1, &cls_order, &conj, &cls_cyclic) == ARTINX_OK);
  CHECK(cls_order == 2);
  CHECK(conj == 3);
  CHECK(cls_cyclic == 1);
  CHECK(artinx_group_class_info(g, 4, &cls_order, &conj, &cls_cyclic) == ARTINX_ERR_INVALID_ARGUMENT);

  int64_t m = -1;
  CHECK(artinx_mark(g, 0, 1, &m) == ARTINX_OK);
  CHECK(m == 3);
  CHECK(artinx_mark(g, 2, 2, &m) == ARTINX_OK);
  CHECK(m == 2);
  CHECK(artinx_mark(g, 9, 0, &m) == ARTINX_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(artinx_last_error()) > 0);

  uint64_t c = 0;
  CHECK(artinx_conductor(g, &c) == ARTINX_OK);
  CHECK(c == 6);
  artinx_group_destroy(g);
}

TEST_CASE("exponents through the C API") {
  artinx_group* g = open("Q8");
  uint64_t a = 0;
  CHECK(artinx_exponent(g, nullptr, ARTINX_METHOD_BOTH, &a) == ARTINX_OK);
  CHECK(a == 2);
  CHECK(artinx_exponent(g, nullptr, ARTINX_METHOD_MARKS, &a) == ARTINX_OK);
  CHECK(a == 2);
  const uint32_t cls[] = {0, 5};
  artinx_family fam{cls, 2};
  CHECK(artinx_exponent(g, &fam, ARTINX_METHOD_BOTH, &a) == ARTINX_OK);
  CHECK(8 % a == 0);
  const uint32_t bad[] = {6};
  artinx_family bad_fam{bad, 1};
  CHECK(artinx_exponent(g, &bad_fam, ARTINX_METHOD_BOTH, &a) == ARTINX_ERR_INVALID_ARGUMENT);
  artinx_group_destroy(g);

  artinx_group* c12 = open("C12");
  CHECK(artinx_exponent(c12, nullptr, ARTINX_METHOD_CONGRUENCE, &a) == ARTINX_OK);
  CHECK(a == 1);
  artinx_group_destroy(c12);
}

TEST_CASE("rendered output") {
  artinx_group* g = open("S3");
  char* out = nullptr;
  REQUIRE(artinx_report(g, nullptr, ARTINX_METHOD_BOTH, 1, ARTINX_FORMAT_JSON, &out) == ARTINX_OK);
  const std::string json = take(out);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"exponent\": 2") != std::string::npos);
  REQUIRE(artinx_marks_render(g, ARTINX_FORMAT_TEXT, &out) == ARTINX_OK);
  CHECK(take(out).find("C2*3") != std::string::npos);
  artinx_group_destroy(g);
}

TEST_CASE("errors") {
  artinx_group* g = nullptr;
  CHECK(artinx_group_create("X9", nullptr, &g) == ARTINX_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(artinx_last_error()).find("X9") != std::string::npos);
  CHECK(artinx_group_create("C512", nullptr, &g) == ARTINX_ERR_LIMIT);
  CHECK(artinx_group_create(nullptr, nullptr, &g) == ARTINX_ERR_INVALID_ARGUMENT);
  CHECK(artinx_group_order(nullptr, nullptr) == ARTINX_ERR_INVALID_ARGUMENT);
  artinx_group_destroy(nullptr);
  artinx_string_free(nullptr);
}

TEST_CASE("sweep through the C API") {
  artinx_sweep_options opts{12, "cyclic,conductor", 2, 0, nullptr};
  char* text = nullptr;
  char* json = nullptr;
  uint32_t failures = 99;
  CHECK(artinx_sweep(&opts, &text, &json, &failures) == ARTINX_OK);
  CHECK(failures == 0);
  CHECK(take(text).find("C12") != std::string::npos);
  CHECK(take(json).find("\"ok\": true") != std::string::npos);
  artinx_sweep_options bad{12, "nope", 1, 0, nullptr};
  CHECK(artinx_sweep(&bad, &text, nullptr, nullptr) == ARTINX_ERR_PARSE);
  artinx_sweep_options big{300, nullptr, 1, 0, nullptr};
  CHECK(artinx_sweep(&big, nullptr, nullptr, nullptr) == ARTINX_ERR_INVALID_ARGUMENT);
}
