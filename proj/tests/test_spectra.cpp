#include <doctest.h>

#include "eqbif/spectra.hpp"
#include "helpers.hpp"

using namespace eqbif;

namespace {

const LaplaceEigenData& at_beta(const std::vector<LaplaceEigenData>& s, long beta) {
  for (const auto& e : s)
    if (e.beta == beta) return e;
  FAIL("beta not found");
  return s.front();
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Degree-k harmonics on S^{n-1}: homogeneous polynomials of degree k minus
// those of degree k-2, and the closed form of the same count.
long harmonic_dim(long n, long k) { return binomial(n - 1 + k, k) - binomial(n - 3 + k, k - 2); }
long harmonic_dim_closed(long n, long k) {
  if (k == 0) return 1;
  return binomial(n - 2 + k, k) * (n - 2 + 2 * k) / (n - 2 + k);
}

}  // namespace

TEST_CASE("flat torus provider") {
  const auto s1 = flat_torus_spectrum(1, 4);
  REQUIRE(s1.size() == 3);
  CHECK(s1[0].beta == 0);
  CHECK(s1[0].eigenspace.dim() == 1);
  CHECK(s1[1].eigenspace == TorusRep::irreducible({1}));
  CHECK(s1[2].eigenspace == TorusRep::irreducible({2}));
  CHECK(s1[2].irreducible_nontrivial);
  CHECK(s1[2].highest_weight == Weight{2});

  const auto s2 = flat_torus_spectrum(2, 2);
  REQUIRE(s2.size() == 3);
  CHECK(at_beta(s2, 1).eigenspace.multiplicity({1, 0}) == 1);
  CHECK(at_beta(s2, 1).eigenspace.multiplicity({0, 1}) == 1);
  CHECK(at_beta(s2, 1).eigenspace.dim() == 4);
  CHECK(at_beta(s2, 2).eigenspace.multiplicity({1, 1}) == 1);
  CHECK(at_beta(s2, 2).eigenspace.multiplicity({1, -1}) == 1);
  CHECK(at_beta(s2, 2).eigenspace.dim() == 4);
  CHECK_FALSE(at_beta(s2, 1).irreducible_nontrivial);

  const auto s0 = flat_torus_spectrum(1, 0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].eigenspace.dim() == 1);
}

TEST_CASE("sphere provider") {
  const auto s3 = sphere_spectrum(3, 2);
  const auto& k1 = at_beta(s3, 2);
  CHECK(k1.eigenspace.dim() == 3);
  CHECK(k1.eigenspace.trivial_mult() == 1);
  CHECK(k1.eigenspace.multiplicity({1}) == 1);
  const auto& k2 = at_beta(s3, 6);
  CHECK(k2.eigenspace.dim() == 5);
  CHECK(k2.eigenspace.multiplicity({1}) == 1);
  CHECK(k2.eigenspace.multiplicity({2}) == 1);
  CHECK(k2.highest_weight == Weight{2});

  const auto s4 = sphere_spectrum(4, 1);
  const auto& k4 = at_beta(s4, 3);
  CHECK(k4.eigenspace.dim() == 4);
  CHECK(k4.eigenspace.multiplicity({1, 0}) == 1);
  CHECK(k4.eigenspace.multiplicity({0, 1}) == 1);

  for (long n = 3; n <= 5; ++n) {
    const auto s = sphere_spectrum(static_cast<std::size_t>(n), 6);
    REQUIRE(s.size() == 7);
    for (long k = 0; k <= 6; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(s[static_cast<std::size_t>(k)].beta == k * (k + n - 2));
      CHECK(s[static_cast<std::size_t>(k)].eigenspace.dim() == harmonic_dim(n, k));
      CHECK(harmonic_dim(n, k) == harmonic_dim_closed(n, k));
    }
  }
}

TEST_CASE("validate the circle fixture") {
  const auto rep = validate(circle_quartic_problem());
  CHECK(rep.ok());
  CHECK(rep.n1);
  CHECK(rep.n2);
  CHECK(rep.e_holds);
  REQUIRE(rep.e_witnesses.size() == 1);
  CHECK(rep.e_witnesses[0] == Weight{1});
  CHECK(rep.highest_weights_ok);
}

TEST_CASE("validate detects failures") {
  auto spec = circle_quartic_problem();
  spec.matrix_spectrum[0].alpha = 0;
  CHECK_FALSE(validate(spec).n1);

  auto twice = circle_quartic_problem();
  twice.p = 4;
  twice.matrix_spectrum.push_back({Rational(2), TorusRep::irreducible({1}), Weight{1}});
  const auto rep = validate(twice);
  CHECK(rep.ok());
  CHECK_FALSE(rep.e_holds);

  auto dims = circle_quartic_problem();
  dims.p = 3;
  REQUIRE_FALSE(validate(dims).ok());
  CHECK(validate(dims).structural_errors.front().code == ErrorCode::kDimMismatch);

  auto trivial = circle_quartic_problem();
  trivial.degF_pos = EulerElement(1);
  REQUIRE_FALSE(validate(trivial).ok());
  CHECK(validate(trivial).structural_errors.front().code == ErrorCode::kB6Trivial);
  CHECK_THROWS_AS(require_valid(trivial), InputError);
}

TEST_CASE("cutoff refusal") {
  const auto spec = circle_quartic_problem(9);
  CHECK_NOTHROW(require_cutoff(spec, Rational(9)));
  CHECK_THROWS_AS(require_cutoff(spec, Rational(16)), RefusalError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(rational_to_string(Rational(-3, 9)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
}
