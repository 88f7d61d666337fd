#include <doctest.h>

#include <random>

#include "artin.hpp"
#include "burnside.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace artinx;

namespace {

struct Fixture {
  GroupTable g;
  SubgroupLattice lat;
  MarkTable marks;
  explicit Fixture(const char* spec)
      : g(build_group(parse_group_spec(spec))), lat(enumerate_subgroups(g)), marks(build_mark_table(g, lat)) {}
};

std::vector<std::int64_t> row(const MarkTable& t, std::size_t v) {
  std::vector<std::int64_t> out;
  for (std::size_t u = 0; u < t.size(); ++u) out.push_back(t.at(v, u));
  return out;
}

const char* const kGroups[] = {"C1", "C2", "C4", "C6", "C2xC2", "C2xC4", "C3xC3", "D8", "D10", "D12",
                               "Q8", "S3", "A4", "S4", "Q16", "SD16", "C2xC2xC2", "D8xC2", "H3"};

}  // namespace

TEST_CASE("mark: examples") {
  Fixture q8("Q8");
  // Class 2 is one of the three cyclic subgroups of order 4.
  REQUIRE(q8.lat[2].order() == 4);
  CHECK(mark(q8.g, q8.lat, 2, 2) == 2);
  Fixture s3("S3");
  CHECK(mark(s3.g, s3.lat, 1, 2) == 0);
  for (std::size_t v = 0; v < s3.lat.size(); ++v) CHECK(mark(s3.g, s3.lat, 0, v) == static_cast<std::int64_t>(6 / s3.lat[v].order()));
}

TEST_CASE("mark tables: examples") {
  Fixture c2("C2");
  CHECK(row(c2.marks, 0) == std::vector<std::int64_t>{2, 0});
  CHECK(row(c2.marks, 1) == std::vector<std::int64_t>{1, 1});
  Fixture s3("S3");
  CHECK(row(s3.marks, 0) == std::vector<std::int64_t>{6, 0, 0, 0});
  CHECK(row(s3.marks, 1) == std::vector<std::int64_t>{3, 1, 0, 0});
  CHECK(row(s3.marks, 2) == std::vector<std::int64_t>{2, 0, 2, 0});
  CHECK(row(s3.marks, 3) == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("mark tables: invariants and brute-force fixed-coset counts") {
  for (const char* s : kGroups) {
    CAPTURE(s);
    Fixture f(s);
    const CheckTally t = check_mark_table(f.g, f.lat, f.marks);
    CHECK(t.ok());
    const std::size_t n = f.g.order();
    for (std::size_t v = 0; v < f.lat.size(); ++v)
      for (std::size_t u = 0; u < f.lat.size(); ++u)
        CHECK(f.marks.at(v, u) == oracle::mark(f.g, oracle::to_set(n, f.lat[u].representative.members),
                                               oracle::to_set(n, f.lat[v].representative.members)));
  }
}

TEST_CASE("ghost_of: examples") {
  Fixture c2("C2");
  CHECK(ghost_of(c2.marks, basis_element(2, 0)) == GhostVector{2, 0});
  CHECK(ghost_of(c2.marks, basis_element(2, 1)) == GhostVector{1, 1});
  Fixture s3("S3");
  CHECK(ghost_of(s3.marks, BurnsideElement{{0, 1, 0, -1}}) == GhostVector{2, 0, -1, -1});
}

TEST_CASE("solve_membership: examples") {
  Fixture s3("S3");
  const MembershipResult half = solve_membership(s3.marks, {1, 1, 1, 0});
  REQUIRE(std::holds_alternative<NotIntegral>(half));
  CHECK(std::get<NotIntegral>(half) == NotIntegral{2, 2});
  const MembershipResult whole = solve_membership(s3.marks, {2, 2, 2, 0});
  REQUIRE(std::holds_alternative<BurnsideElement>(whole));
  CHECK(std::get<BurnsideElement>(whole).coeffs == std::vector<std::int64_t>{-1, 2, 1, 0});
  CHECK(ghost_of(s3.marks, std::get<BurnsideElement>(whole)) == GhostVector{2, 2, 2, 0});
  CHECK_THROWS_AS(solve_membership(s3.marks, {1, 2}), PreconditionError);
}

TEST_CASE("solve_exact agrees with an independent fraction solver") {
  std::mt19937_64 rng(11);
  for (const char* s : kGroups) {
    CAPTURE(s);
    Fixture f(s);
    const std::size_t n = f.lat.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u) m[v][u] = f.marks.at(v, u);
    for (int trial = 0; trial < 10; ++trial) {
      GhostVector target(n);
      std::vector<long long> t(n);
      for (std::size_t i = 0; i < n; ++i) t[i] = target[i] = static_cast<std::int64_t>(rng() % 19) - 9;
      const auto mine = solve_exact(f.marks, target);
      const auto ref = oracle::solve(m, t);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(static_cast<long long>(mine[i].num()) == ref[i].num);
        CHECK(static_cast<long long>(mine[i].den()) == ref[i].den);
      }
    }
  }
}

TEST_CASE("solve_membership round trip") {
  std::mt19937_64 rng(5);
  for (const char* s : kGroups) {
    CAPTURE(s);
    Fixture f(s);
    for (int trial = 0; trial < 100; ++trial) {
      BurnsideElement x;
      for (std::size_t i = 0; i < f.lat.size(); ++i) x.coeffs.push_back(static_cast<std::int64_t>(rng() % 19) - 9);
      const MembershipResult r = solve_membership(f.marks, ghost_of(f.marks, x));
      REQUIRE(std::holds_alternative<BurnsideElement>(r));
      CHECK(std::get<BurnsideElement>(r) == x);
    }
  }
}

TEST_CASE("conductor") {
  CHECK(conductor(Fixture("C4").marks) == 4);
  CHECK(conductor(Fixture("S3").marks) == 6);
  CHECK(conductor(Fixture("C1").marks) == 1);
  for (const char* s : kGroups) {
    CAPTURE(s);
    Fixture f(s);
    CHECK(conductor(f.marks) == f.g.order());
  }
}

TEST_CASE("multiply_basis: examples") {
  Fixture c2("C2");
  CHECK(multiply_basis(c2.g, c2.lat, 0, 0).coeffs == std::vector<std::int64_t>{2, 0});
  for (const char* s : {"S3", "Q8", "A4"}) {
    Fixture f(s);
    const std::size_t n = f.lat.size();
    for (std::size_t v = 0; v < n; ++v) {
      CHECK(multiply_basis(f.g, f.lat, n - 1, v) == basis_element(n, v));
      BurnsideElement free = basis_element(n, 0);
      free.coeffs[0] = static_cast<std::int64_t>(f.g.order() / f.lat[v].order());
      CHECK(multiply_basis(f.g, f.lat, 0, v) == free);
    }
  }
}

TEST_CASE("ghost map is a ring homomorphism on basis products") {
  for (const char* s : kGroups) {
    CAPTURE(s);
    Fixture f(s);
    const std::size_t n = f.lat.size();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        const GhostVector prod = ghost_of(f.marks, multiply_basis(f.g, f.lat, u, v));
        for (std::size_t w = 0; w < n; ++w) CHECK(prod[w] == f.marks.at(u, w) * f.marks.at(v, w));
        CHECK(multiply_basis(f.g, f.lat, u, v) == multiply_basis(f.g, f.lat, v, u));
      }
  }
}

TEST_CASE("marks satisfy the coset-sum congruence") {
  // For U normal in V with (V:U) a prime power and any basis set X:
  // the sum over vU of the mark of <v,U> on X is divisible by (V:U).
  for (const char* s : kGroups) {
    CAPTURE(s);
    Fixture f(s);
    f.lat.for_each_subgroup([&](std::size_t, const Subgroup& v) {
      f.lat.for_each_subgroup([&](std::size_t, const Subgroup& u) {
        if (!u.is_subgroup_of(v) || u.order == v.order) return;
        if (!prime_power(v.order / u.order) || !is_normal_in(f.g, u, v)) return;
        const std::size_t index = v.order / u.order;
        for (std::size_t x = 0; x < f.lat.size(); ++x) {
          std::int64_t sum = 0;
          for (Element r : cosets(f.g, v, u)) {
            const std::size_t cls = f.lat.class_index(join_normal(f.g, u.members, r));
            sum += f.marks.at(x, cls);
          }
          CHECK(sum % static_cast<std::int64_t>(index) == 0);
        }
      });
    });
  }
}

TEST_CASE("lcm_u64") {
  CHECK(lcm_u64(4, 6) == 12);
  CHECK(lcm_u64(1, 9) == 9);
  CHECK(lcm_u64(8, 8) == 8);
}
