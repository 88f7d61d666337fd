#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "group.hpp"
#include "oracles.hpp"
#include "subgroup.hpp"

using namespace artinx;

namespace {

GroupTable make(const char* spec) { return build_group(parse_group_spec(spec)); }

std::size_t count_involutions(const GroupTable& g) {
  std::size_t k = 0;
  for (Element x = 0; x < g.order(); ++x) k += g.element_order(x) == 2;
  return k;
}

void check_axioms(const GroupTable& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (Element b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    REQUIRE(std::count(row.begin(), row.end(), true) == static_cast<long>(n));
    REQUIRE(std::count(col.begin(), col.end(), true) == static_cast<long>(n));
    REQUIRE(g.mul(0, a) == a);
    REQUIRE(g.mul(a, 0) == a);
    REQUIRE(g.mul(a, g.inv(a)) == 0);
    REQUIRE(n % g.element_order(a) == 0);
  }
  if (n <= 64)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

}  // namespace

TEST_CASE("parse: grammar examples") {
  CHECK(parse_group_spec("C6") == GroupSpec::cyclic(6));
  CHECK(parse_group_spec("C2xC2") == GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  CHECK(parse_group_spec("Q8") == GroupSpec::quaternion(8));
  CHECK(parse_group_spec("SD16") == GroupSpec::semidihedral(16));
  CHECK(parse_group_spec("H3") == GroupSpec::heisenberg(3));
  CHECK(parse_group_spec("perm:(1 2),(1 2 3)") ==
        GroupSpec::permutations({CyclePerm{{1, 2}}, CyclePerm{{1, 2, 3}}}));
  CHECK(parse_group_spec("perm:(1 2)(3 4),(1 3)") ==
        GroupSpec::permutations({CyclePerm{{1, 2}, {3, 4}}, CyclePerm{{1, 3}}}));
}

TEST_CASE("parse: canonical form round-trips") {
  for (const char* s : {"C1", "C12", "D8", "Q16", "SD32", "S4", "A4", "H5", "C2xC4xC8", "D6xC3", "perm:(1 2 3),(1 2)"}) {
    const GroupSpec spec = parse_group_spec(s);
    CHECK(parse_group_spec(to_string(spec)) == spec);
  }
}

TEST_CASE("parse: malformed specs are rejected") {
  for (const char* s : {"", "X9", "C", "C0", "C2x", "xC2", "D5", "D2", "Q12", "Q4", "SD8", "SD24", "H4", "H1",
                        "perm:", "perm:(1 2", "perm:(1 1)", "perm:(0 1)", "C2y3", "C-1"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_group_spec(s), ParseError);
  }
}

TEST_CASE("build: order cap") {
  CHECK_THROWS_AS(make("C257"), LimitError);
  CHECK_THROWS_AS(make("S6"), LimitError);
  CHECK_THROWS_AS(make("C16xC16xC2"), LimitError);
  CHECK(make("C256").order() == 256);
  CHECK_THROWS_AS(build_group(GroupSpec::dihedral(7)), PreconditionError);
  CHECK_THROWS_AS(build_group(GroupSpec::heisenberg(4)), PreconditionError);
}

TEST_CASE("build: tables satisfy the group axioms") {
  for (const char* s : {"C1", "C2", "C12", "C2xC2", "C2xC4xC3", "D6", "D8", "D16", "Q8", "Q16", "SD16", "SD32", "S3",
                        "S4", "A4", "A5", "H3", "H5", "perm:(1 2),(1 2 3)", "perm:(1 2 3 4 5),(1 2)(3 4)", "Q8xC3"}) {
    CAPTURE(s);
    check_axioms(make(s));
  }
}

TEST_CASE("build: named families") {
  CHECK(make("C4").order() == 4);
  {
    const GroupTable c4 = make("C4");
    // Z/4 under addition: element k has order 4 / gcd(k, 4).
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.element_order(2) == 2);
    CHECK(c4.is_abelian());
  }
  CHECK(make("perm:(1 2),(1 2 3)").order() == 6);
  CHECK_FALSE(make("perm:(1 2),(1 2 3)").is_abelian());
  for (unsigned n : {4u, 6u, 8u, 10u, 16u, 32u, 64u}) CHECK(build_group(GroupSpec::dihedral(n)).order() == n);
  for (unsigned n : {8u, 16u, 32u, 64u, 128u}) {
    const GroupTable q = build_group(GroupSpec::quaternion(n));
    CHECK(q.order() == n);
    CHECK(count_involutions(q) == 1);
  }
  for (unsigned n : {16u, 32u, 64u}) {
    const GroupTable sd = build_group(GroupSpec::semidihedral(n));
    CHECK(sd.order() == n);
    bool has_cyclic_index_two = false;
    for (Element x = 0; x < n; ++x) has_cyclic_index_two |= sd.element_order(x) == n / 2;
    CHECK(has_cyclic_index_two);
  }
  CHECK(make("S4").order() == 24);
  CHECK(make("A4").order() == 12);
  CHECK(make("A5").order() == 60);
  const GroupTable h3 = make("H3");
  CHECK(h3.order() == 27);
  CHECK_FALSE(h3.is_abelian());
  for (Element x = 0; x < 27; ++x) CHECK((x == 0 || h3.element_order(x) == 3));
}

TEST_CASE("element_order examples") {
  const GroupTable q8 = make("Q8");
  CHECK(q8.element_order(0) == 1);
  CHECK(q8.element_order(q8.generators().front()) == 4);
  CHECK(make("C12").element_order(3) == 4);
}

TEST_CASE("centralizer and center") {
  const GroupTable q8 = make("Q8");
  CHECK(centralizer(q8, whole_group(q8)).order == 2);
  CHECK(center(q8).order == 2);
  const GroupTable s3 = make("S3");
  CHECK(center(s3).order == 1);
  const GroupTable ab = make("C2xC6");
  const Subgroup u = generated_subgroup(ab, {3});
  CHECK(centralizer(ab, u).order == 12);
}

TEST_CASE("commutator_closure") {
  const GroupTable ab = make("C4xC2");
  CHECK(commutator_closure(ab, whole_group(ab), whole_group(ab)).order == 1);
  const GroupTable q8 = make("Q8");
  const Subgroup d = commutator_closure(q8, whole_group(q8), whole_group(q8));
  CHECK(d.order == 2);
  CHECK(d == center(q8));
  const GroupTable s3 = make("S3");
  CHECK(commutator_closure(s3, whole_group(s3), whole_group(s3)).order == 3);
  CHECK(commutator_closure(make("S4"), whole_group(make("S4")), whole_group(make("S4"))).order == 12);
}

TEST_CASE("relabeling preserves the multiplication") {
  std::mt19937_64 rng(7);
  const GroupTable g = make("D12");
  const auto perm = random_relabeling(g.order(), rng);
  CHECK(perm[0] == 0);
  const GroupTable h = g.relabeled(perm);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) CHECK(h.mul(perm[a], perm[b]) == perm[g.mul(a, b)]);
}

TEST_CASE("generated_subgroup agrees with naive closure") {
  const GroupTable q8 = make("Q8");
  CHECK(generated_subgroup(q8, {}).order == 1);
  const auto& gens = q8.generators();
  REQUIRE(gens.size() == 2);
  CHECK(generated_subgroup(q8, {gens[0], gens[1]}).order == 8);
  const GroupTable c8 = make("C8");
  const Subgroup s = generated_subgroup(c8, {2});
  CHECK(s.order == 4);
  CHECK(s.is_cyclic);
  const GroupTable s4 = make("S4");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Element a = rng() % 24, b = rng() % 24;
    const Subgroup sg = generated_subgroup(s4, {a, b});
    CHECK(oracle::to_set(24, sg.members) == oracle::closure(s4, oracle::from_elements(24, {a, b})));
    CHECK(sg.is_cyclic == oracle::is_cyclic(s4, oracle::to_set(24, sg.members)));
  }
}
