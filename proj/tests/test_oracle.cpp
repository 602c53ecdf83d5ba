#include <doctest.h>

#include <set>

#include "eqbif/oracle.hpp"

using namespace eqbif;

TEST_CASE("every suite is registered once") {
  const auto names = suite_names();
  CHECK(names.size() == 22);
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
}

TEST_CASE("selftest is deterministic per seed") {
  const auto a = run_selftest(3, 5);
  const auto b = run_selftest(3, 5);
  REQUIRE(a.suites.size() == b.suites.size());
  for (const auto& [name, s] : a.suites) {
    CHECK(b.suites.at(name).failures == s.failures);
    CHECK(b.suites.at(name).first_counterexample == s.first_counterexample);
  }
  CHECK(a.passed());
  CHECK(run_selftest(4, 5).passed());
  CHECK_THROWS_AS(run_selftest(1, 0), InputError);
  CHECK_THROWS_AS(run_suite("no.such.suite", 1, 1), InputError);
}

TEST_CASE("merge adds counts and keeps the first counterexample") {
  SelfTestReport a, b;
  a.suites["s"] = {10, 0, ""};
  b.suites["s"] = {5, 2, "x"};
  b.suites["t"] = {1, 0, ""};
  a.merge(b);
  CHECK(a.suites["s"].trials == 15);
  CHECK(a.suites["s"].failures == 2);
  CHECK(a.suites["s"].first_counterexample == "x");
  CHECK(a.suites.size() == 2);
  CHECK_FALSE(a.passed());
}

TEST_CASE("broken rules are caught") {
  const auto star = run_selftest(1, 30, {StarRule::kFlippedDimension, TensorRule::kStandard});
  CHECK_FALSE(star.passed());
  CHECK(star.suites.at("eulerring.ring_axioms").failures > 0);
  const auto tensor = run_selftest(1, 30, {StarRule::kStandard, TensorRule::kSignCollapsed});
  CHECK_FALSE(tensor.passed());
  CHECK(tensor.suites.at("torusrep.tensor_weights").failures > 0);
}

TEST_CASE("minors oracle") {
  const IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}}, 2);
  CHECK(oracle::invariant_factors_by_minors(m) == std::vector<Integer>{2, 4});
  CHECK(oracle::invariant_factors_by_minors(IntMatrix(2, 3)).empty());
}
