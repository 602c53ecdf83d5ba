#include <doctest.h>

#include <cmath>
#include <random>

#include "eqbif/corroborate.hpp"
#include "eqbif/errors.hpp"

using namespace eqbif;

TEST_CASE("spectrum at zero is (k^2 - lambda)/(1 + k^2)") {
  const std::size_t n = 5;
  const double lambda = 2.25;
  const auto ev = normalized_spectrum_at_zero(n, lambda);
  for (int f = 0; f < 2; ++f)
    for (std::size_t k = 0; k <= n; ++k) {
      const double expected = (double(k * k) - lambda) / (1.0 + double(k * k));
      CHECK(ev[mode_index(n, f, k, false)] == doctest::Approx(expected).epsilon(1e-14));
      if (k > 0) CHECK(ev[mode_index(n, f, k, true)] == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("stability scan") {
  const auto c = stability_scan(8, 0.5, 5.0);
  REQUIRE(c.size() == 2);
  CHECK(std::abs(c[0] - 1.0) < 1e-6);
  CHECK(std::abs(c[1] - 4.0) < 1e-6);
  CHECK(stability_scan(8, 0.5, 0.9).empty());
  const auto z = stability_scan(8, -1.0, 0.5);
  REQUIRE(z.size() == 1);
  CHECK(std::abs(z[0]) < 1e-6);
  CHECK_THROWS_AS(stability_scan(3, 0.5, 5.0), RefusalError);
  CHECK_THROWS_AS(stability_scan(8, 2.0, 1.0), RefusalError);
}

TEST_CASE("newton branch") {
  const auto a = newton_branch(1, 1.5);
  CHECK(a.converged);
  CHECK(a.iterations <= 10);
  CHECK(std::abs(a.amplitude - std::sqrt(0.5)) < 1e-8);

  const auto b = newton_branch(1, 1.0 + 1e-4);
  CHECK(b.converged);
  CHECK(std::abs(b.amplitude - 1e-2) < 1e-8);

  const auto c = newton_branch(2, 6.0);
  CHECK(c.converged);
  CHECK(std::abs(c.amplitude - std::sqrt(2.0)) < 1e-8);

  CHECK_THROWS_AS(newton_branch(2, 4.0), RefusalError);
  CHECK_THROWS_AS(newton_branch(0, 4.0), RefusalError);
  CHECK_THROWS_AS(newton_branch(7, 50.0, 8), RefusalError);
}

TEST_CASE("iteration cap reports divergence") {
  const auto r = newton_branch(1, 1.5, 8, 1);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 1);
}

TEST_CASE("exact ansatz solves the discrete equation") {
  for (std::size_t k = 1; k <= 3; ++k)
    for (std::size_t n = k; n <= 10; ++n) {
      const auto u = exact_ansatz(n, k, double(k * k) + 0.75);
      CHECK(sup_norm(residual(u)) < 1e-12);
      CHECK(amplitude(u) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
    }
}

TEST_CASE("residual is the gradient of the energy") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g(0.0, 0.3);
  for (int t = 0; t < 10; ++t) {
    CircleModel u(4, 2.0);
    std::vector<double> dir(u.size());
    for (auto& x : u.modes) x = g(rng);
    for (auto& x : dir) x = g(rng);
    const double h = 1e-5;
    CircleModel plus = u, minus = u;
    for (std::size_t i = 0; i < u.size(); ++i) {
      plus.modes[i] += h * dir[i];
      minus.modes[i] -= h * dir[i];
    }
    const double fd = (energy(plus) - energy(minus)) / (2 * h);
    const double exact = mean_product(4, residual(u), dir);
    CHECK(std::abs(fd - exact) <= 1e-6 * std::abs(exact));
  }
}

TEST_CASE("jacobian matches finite differences") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g(0.0, 0.4);
  CircleModel u(3, 1.7);
  for (auto& x : u.modes) x = g(rng);
  const auto jac = jacobian(u);
  const std::size_t n = u.size();
  const double h = 1e-6;
  for (std::size_t c = 0; c < n; ++c) {
    CircleModel p = u, m = u;
    p.modes[c] += h;
    m.modes[c] -= h;
    const auto rp = residual(p), rm = residual(m);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(jac[c * n + i] == doctest::Approx((rp[i] - rm[i]) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("torus action preserves the residual norm") {
  const auto sol = newton_branch(1, 1.5).state;
  std::vector<double> r0 = residual(sol);
  double n0 = 0.0;
  for (double x : r0) n0 += x * x;
  for (double shift : {0.3, 1.1, -2.0})
    for (double phase : {0.0, 0.7, 2.5}) {
      const auto moved = act(sol, shift, phase);
      double n1 = 0.0;
      for (double x : residual(moved)) n1 += x * x;
      CHECK(std::abs(std::sqrt(n1) - std::sqrt(n0)) < 1e-12);
      CHECK(amplitude(moved) == doctest::Approx(amplitude(sol)).epsilon(1e-13));
    }

  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0.0, 0.5);
  CircleModel u(4, 3.0);
  for (auto& x : u.modes) x = g(rng);
  const auto moved = act(u, 0.4, 1.3);
  CHECK(energy(moved) == doctest::Approx(energy(u)).epsilon(1e-12));
}
