#include <doctest.h>

#include <cmath>

#include "eqbif/oracle.hpp"
#include "eqbif/torusrep.hpp"
#include "helpers.hpp"

using namespace eqbif;
using testing::Q;

TEST_CASE("direct_sum") {
  const auto r11 = TorusRep::irreducible({1});
  CHECK(direct_sum(r11, r11) == TorusRep::irreducible({1}, 2));
  const auto mixed = direct_sum(TorusRep(1, 1), r11);
  CHECK(mixed.trivial_mult() == 1);
  CHECK(mixed.multiplicity({1}) == 1);
  CHECK(mixed.dim() == 3);
  CHECK(direct_sum(TorusRep::irreducible({-1}), r11) == TorusRep::irreducible({1}, 2));
  CHECK_THROWS_AS(direct_sum(r11, TorusRep(2, 1)), InputError);
}

TEST_CASE("tensor") {
  const auto t = tensor(TorusRep::irreducible({1}), TorusRep::irreducible({1}));
  TorusRep expected(2);
  expected.add({1, 1});
  expected.add({1, -1});
  CHECK(t == expected);
  CHECK(t.dim() == 4);

  CHECK(tensor(TorusRep(1, 1), TorusRep::irreducible({3})) == TorusRep::irreducible({0, 3}));

  const auto big = tensor(TorusRep::irreducible({1}, 2), TorusRep::irreducible({2}, 3));
  CHECK(big.multiplicity({1, 2}) == 6);
  CHECK(big.multiplicity({1, -2}) == 6);
  CHECK(big.dim() == 24);
}

TEST_CASE("sign-collapsed tensor is detectably wrong") {
  const auto t = tensor(TorusRep::irreducible({1}), TorusRep::irreducible({1}),
                        TensorRule::kSignCollapsed);
  CHECK(t.dim() == 4);
  CHECK(t.multiplicity({1, -1}) == 0);
}

TEST_CASE("character") {
  const auto r11 = TorusRep::irreducible({1});
  CHECK(character(r11, Q({{0, 1}})) == doctest::Approx(2.0));
  CHECK(character(r11, Q({{1, 2}})) == doctest::Approx(-2.0));
  CHECK(character(TorusRep(1, 1), Q({{3, 7}})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(character(r11, Q({{1, 2}, {1, 3}})), InputError);
}

TEST_CASE("complex weight oracle") {
  const auto w = oracle::complex_weights(TorusRep::irreducible({2}, 3));
  CHECK(w.at({2}) == 3);
  CHECK(w.at({-2}) == 3);
}

TEST_CASE("torusrep property suites") {
  for (const auto& name : suite_names()) {
    if (name.rfind("torusrep.", 0) != 0) continue;
    CAPTURE(name);
    const SuiteResult r = run_suite(name, 12, 60);
    CHECK_MESSAGE(r.failures == 0, r.first_counterexample);
  }
}
