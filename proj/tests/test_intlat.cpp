#include <doctest.h>

#include <random>

#include "eqbif/oracle.hpp"
#include "helpers.hpp"

using namespace eqbif;
using testing::H;
using testing::M;
using testing::Q;

namespace {

std::vector<Integer> ints(std::vector<long> v) { return {v.begin(), v.end()}; }

void check_snf(const IntMatrix& m) {
  const SmithDecomposition s = snf(m);
  CHECK(s.P * m * s.Q == s.D);
  CHECK(abs(s.P.determinant()) == 1);
  CHECK(abs(s.Q.determinant()) == 1);
  CHECK(s.Q * s.Q_inverse == IntMatrix::identity(m.cols()));
  CHECK(s.invariant_factors == oracle::invariant_factors_by_minors(m));
}

}  // namespace

TEST_CASE("snf of small matrices") {
  CHECK(snf(M({{1, 0}, {0, 1}})).invariant_factors == ints({1, 1}));
  CHECK(snf(M({{1, 0}, {0, 1}})).D == IntMatrix::identity(2));
  CHECK(snf(M({{2, 0}, {0, 3}})).invariant_factors == ints({1, 6}));
  CHECK(snf(M({{2, 4}, {6, 8}})).invariant_factors == ints({2, 4}));
  check_snf(M({{2, 0}, {0, 3}}));
  check_snf(M({{2, 4}, {6, 8}}));
  check_snf(M({{0, 0, 0}, {0, 0, 0}}));
  check_snf(M({{4, 6, 10}, {6, 9, 15}}));
  check_snf(M({{3}, {5}, {-7}}));
}

TEST_CASE("snf agrees with the minors oracle on random matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) check_snf(oracle::random_matrix(rng, 4, 12));
}

TEST_CASE("hermite form is canonical") {
  const IntMatrix a = hermite_form(M({{2, 2}, {1, 1}, {0, 3}}));
  const IntMatrix b = hermite_form(M({{0, 3}, {1, 1}}));
  CHECK(a == b);
  CHECK(a == M({{1, 1}, {0, 3}}));
}

TEST_CASE("subgroup_canonical") {
  const auto h11 = H(2, {{1, 1}});
  CHECK(h11.dim() == 1);
  const auto finite = H(2, {{1, 1}, {1, -1}});
  CHECK(finite.dim() == 0);
  CHECK(finite.annihilator().basis() == M({{1, 1}, {0, 2}}));
  CHECK(H(2, {{1, 1}, {2, 2}}) == h11);
  CHECK(H(2, {{-1, -1}}) == h11);
  CHECK(H(3, {}).is_full());
  CHECK_THROWS_AS(H(2, {{1, 1, 1}}), InputError);
}

TEST_CASE("subgroup_intersect") {
  const auto meet = subgroup_intersect(H(2, {{1, 0}}), H(2, {{0, 1}}));
  CHECK(meet.dim() == 0);
  CHECK(meet == H(2, {{1, 0}, {0, 1}}));
  const auto h = H(3, {{1, 2, 0}, {0, 0, 4}});
  CHECK(subgroup_intersect(h, TorusSubgroup(3)) == h);
  CHECK_THROWS_AS(subgroup_intersect(H(2, {{1, 0}}), H(3, {{1, 0, 0}})), InputError);
}

TEST_CASE("dimension count for (H x T^l) meet H_(m,n)") {
  const auto h = extend_by_full_torus(H(2, {{2, 0}}), 1);
  const auto meet = subgroup_intersect(h, H(3, {{1, 1, 3}}));
  CHECK(meet.dim() == 1);
}

TEST_CASE("codim_generators") {
  const auto h11 = H(2, {{1, 1}});
  const auto g = codim_generators(h11);
  REQUIRE(g.size() == 1);
  CHECK(subgroup_canonical(2, g) == h11);

  const auto h = H(2, {{2, 0}, {0, 3}});
  const auto gh = codim_generators(h);
  CHECK(gh.size() == 2);
  CHECK(subgroup_canonical(2, gh) == h);

  const auto trivial = H(2, {{1, 0}, {0, 1}});
  const auto gt = codim_generators(trivial);
  CHECK(gt.size() == 2);
  CHECK(Lattice(2, gt) == Lattice(2, {ints({1, 0}), ints({0, 1})}));

  CHECK(codim_generators(TorusSubgroup(2)).empty());
}

TEST_CASE("contains") {
  CHECK(contains(H(2, {{1, 1}}), Q({{1, 2}, {1, 2}})));
  CHECK_FALSE(contains(H(2, {{1, 1}, {1, -1}}), Q({{1, 4}, {1, 4}})));
  CHECK(contains(H(2, {{1, 1}, {1, -1}}), Q({{1, 2}, {1, 2}})));
  CHECK(contains(H(2, {{3, 5}}), Q({{0, 1}, {0, 1}})));
  CHECK(contains(TorusSubgroup(2), Q({{1, 3}, {2, 7}})));
  CHECK_THROWS_AS(contains(H(2, {{1, 1}}), Q({{1, 2}})), InputError);
}

TEST_CASE("extend_by_full_torus") {
  const auto e = extend_by_full_torus(H(2, {{1, 1}}), 1);
  CHECK(e == H(3, {{1, 1, 0}}));
  CHECK(extend_by_full_torus(TorusSubgroup(2), 2).is_full());
  CHECK(extend_by_full_torus(TorusSubgroup(2), 2).ambient_rank() == 4);
  const auto f = extend_by_full_torus(H(2, {{1, 0}, {0, 1}}), 3);
  CHECK(f.ambient_rank() == 5);
  CHECK(f.dim() == 3);
}

TEST_CASE("intlat property suites") {
  for (const auto& name : suite_names()) {
    if (name.rfind("intlat.", 0) != 0) continue;
    CAPTURE(name);
    const SuiteResult r = run_suite(name, 11, 40);
    CHECK_MESSAGE(r.failures == 0, r.first_counterexample);
  }
}
