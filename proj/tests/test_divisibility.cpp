#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "skelfact/divisibility.hpp"
#include "skelfact/errors.hpp"
#include "test_util.hpp"

using namespace skelfact;
using testutil::pascal_binomial;

TEST_CASE("exact_binomial basics") {
  CHECK(exact_binomial(8, 3) == 56);
  CHECK(exact_binomial(56, 0) == 1);
  CHECK(exact_binomial(5, 7) == 0);
  CHECK(exact_binomial(5, -1) == 0);
  CHECK_THROWS_AS(exact_binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("exact_binomial agrees with the Pascal recurrence up to n=80") {
  for (int n = 0; n <= 80; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(exact_binomial(n, k) == pascal_binomial(n, k));
  CHECK(exact_binomial(100, 50) == pascal_binomial(100, 50));
  // no overflow at the contract ceiling: C(200,100) has 59 digits
  CHECK(exact_binomial(200, 100) == pascal_binomial(200, 100));
  CHECK(exact_binomial(200, 100).str().size() == 59);
}

TEST_CASE("divisibility membership examples") {
  auto rep = in_divisibility_set(7, 3, 2);
  CHECK(rep.member);
  REQUIRE(rep.per_level.size() == 2);
  CHECK(rep.per_level[0].h == 0);
  CHECK(rep.per_level[0].divisor == 3);
  CHECK(rep.per_level[0].dividend == 21);
  CHECK(rep.per_level[1].divisor == 2);
  CHECK(rep.per_level[1].dividend == 6);

  CHECK(in_divisibility_set(8, 4, 3).member);

  rep = in_divisibility_set(6, 3, 2);
  CHECK_FALSE(rep.member);
  CHECK(rep.per_level[0].passes);        // h=0: 3 | 15
  CHECK_FALSE(rep.per_level[1].passes);  // h=1: 2 does not divide 5
}

TEST_CASE("membership is false whenever k exceeds v") {
  for (int v = 2; v <= 12; ++v)
    for (int k = v + 1; k <= v + 3; ++k)
      for (int ell = 1; ell < k; ++ell)
        CHECK_FALSE(in_divisibility_set(v, k, ell).member);
}

TEST_CASE("preconditions are enforced") {
  CHECK_THROWS_AS(in_divisibility_set(7, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(in_divisibility_set(7, 1, 2), std::invalid_argument);
}

TEST_CASE("residue characterizations up to v=60") {
  for (int v = 3; v <= 60; ++v)
    CHECK(in_divisibility_set(v, 3, 2).member == (v % 6 == 1 || v % 6 == 3));
  for (int v = 4; v <= 60; ++v)
    CHECK(in_divisibility_set(v, 4, 3).member == (v % 6 == 2 || v % 6 == 4));
  for (int v = 2; v <= 60; ++v)
    CHECK(in_divisibility_set(v, 2, 1).member == (v % 2 == 0));
}

TEST_CASE("feasible_range examples") {
  CHECK(feasible_range(3, 2, 3, 21) ==
        std::vector<int>{3, 7, 9, 13, 15, 19, 21});
  CHECK(feasible_range(2, 1, 2, 10) == std::vector<int>{2, 4, 6, 8, 10});
  CHECK(feasible_range(4, 3, 4, 22) ==
        std::vector<int>{4, 8, 10, 14, 16, 20, 22});
  CHECK(feasible_range(4, 3, 4, 40) ==
        std::vector<int>{4, 8, 10, 14, 16, 20, 22, 26, 28, 32, 34, 38, 40});
  CHECK(feasible_range(3, 2, 4, 6).empty());
}

TEST_CASE("exception table parsing") {
  std::istringstream in(
      "# excluded despite divisibility\n"
      "\n"
      "4 3 26   # hypothetical\n"
      "3 2 19\n");
  auto table = ExceptionTable::parse(in);
  CHECK(table.size() == 2);
  CHECK(table.contains(4, 3, 26));
  CHECK(table.contains(3, 2, 19));
  CHECK_FALSE(table.contains(4, 3, 28));

  std::istringstream bad("4 3\n");
  CHECK_THROWS_AS(ExceptionTable::parse(bad), ParseError);
  std::istringstream bad2("4 3 26 9\n");
  CHECK_THROWS_AS(ExceptionTable::parse(bad2), ParseError);
  std::istringstream bad3("x y z\n");
  CHECK_THROWS_AS(ExceptionTable::parse(bad3), ParseError);
  std::istringstream bad4("1 0 5\n");
  CHECK_THROWS_AS(ExceptionTable::parse(bad4), ParseError);

  try {
    std::istringstream nums("4 3 26\nbroken\n");
    ExceptionTable::parse(nums);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("skeleton feasibility verdicts") {
  CHECK(skeleton_feasibility({Family::Simplex, 7, 2}).verdict ==
        Verdict::FactorableConstructive);
  CHECK(skeleton_feasibility({Family::CrossPolytope, 9, 4}).verdict ==
        Verdict::FactorableConstructive);

  auto fv = skeleton_feasibility({Family::Cube, 6, 3});
  CHECK(fv.verdict == Verdict::Unknown);

  fv = skeleton_feasibility({Family::Simplex, 5, 1});
  CHECK(fv.verdict == Verdict::NotFactorable);

  // odd incidence multiplicity is a proof of impossibility even for cubes
  fv = skeleton_feasibility({Family::Cube, 3, 1});
  CHECK(fv.verdict == Verdict::NotFactorable);

  // feasible residue but no implemented constructor: existential for simplex
  fv = skeleton_feasibility({Family::Simplex, 21, 2});
  CHECK(fv.verdict == Verdict::FactorableExistential);
}

TEST_CASE("exception table flips verdicts") {
  ExceptionTable table;
  table.insert(4, 3, 8);
  auto fv = skeleton_feasibility({Family::Simplex, 7, 2}, table);
  CHECK(fv.verdict == Verdict::NotFactorable);
  // for cubes exclusion only blocks the design route; necessity is open
  fv = skeleton_feasibility({Family::Cube, 8, 3}, table);
  CHECK(fv.verdict == Verdict::Unknown);
}

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(Verdict::FactorableConstructive)) ==
        "FactorableConstructive");
  CHECK(std::string(verdict_name(Verdict::NotFactorable)) == "NotFactorable");
}
