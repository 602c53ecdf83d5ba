#include "eqbif/corroborate.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eqbif/errors.hpp"

namespace eqbif {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t field_size(std::size_t n) { return 2 * n + 1; }

// Basis function of coefficient i (within one field) at θ.
double basis(std::size_t i, double theta) {
  if (i == 0) return 1.0;
  const double k = static_cast<double>((i + 1) / 2);
  return (i % 2 == 1) ? std::cos(k * theta) : std::sin(k * theta);
}

double wavenumber(std::size_t i) { return static_cast<double>((i + 1) / 2); }

// Collocation tables: values[j * fs + i] = basis_i(θ_j).
struct Grid {
  std::size_t m;
  std::size_t fs;
  std::vector<double> values;

  explicit Grid(std::size_t n) : m(4 * n + 4), fs(field_size(n)), values(m * fs) {
    for (std::size_t j = 0; j < m; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
      for (std::size_t i = 0; i < fs; ++i) values[j * fs + i] = basis(i, theta);
    }
  }

  void eval(const std::vector<double>& coeffs, std::vector<double>& u0,
            std::vector<double>& u1) const {
    u0.assign(m, 0.0);
    u1.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < fs; ++i) {
        u0[j] += coeffs[i] * values[j * fs + i];
        u1[j] += coeffs[fs + i] * values[j * fs + i];
      }
  }

  // Galerkin coefficients of grid samples g0, g1 (added into out).
  void project(const std::vector<double>& g0, const std::vector<double>& g1,
               std::vector<double>& out) const {
    for (std::size_t i = 0; i < fs; ++i) {
      double s0 = 0.0, s1 = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        s0 += g0[j] * values[j * fs + i];
        s1 += g1[j] * values[j * fs + i];
      }
      const double w = (i == 0 ? 1.0 : 2.0) / static_cast<double>(m);
      out[i] += w * s0;
      out[fs + i] += w * s1;
    }
  }
};

}  // namespace

CircleModel::CircleModel(std::size_t n, double lam)
    : mode_cutoff(n), lambda(lam), modes(2 * field_size(n), 0.0) {}

std::size_t mode_index(std::size_t n, int field, std::size_t k, bool sine) {
  const std::size_t base = static_cast<std::size_t>(field) * field_size(n);
  if (k == 0) return base;
  return base + 2 * k - 1 + (sine ? 1 : 0);
}

std::vector<double> residual(const CircleModel& u) {
  const Grid grid(u.mode_cutoff);
  const std::size_t fs = grid.fs;
  std::vector<double> out(u.size(), 0.0);
  for (std::size_t f = 0; f < 2; ++f)
    for (std::size_t i = 0; i < fs; ++i) {
      const double k = wavenumber(i);
      out[f * fs + i] = (k * k - u.lambda) * u.modes[f * fs + i];
    }
  std::vector<double> u0, u1;
  grid.eval(u.modes, u0, u1);
  for (std::size_t j = 0; j < grid.m; ++j) {
    const double s = u0[j] * u0[j] + u1[j] * u1[j];
    u0[j] *= s;
    u1[j] *= s;
  }
  grid.project(u0, u1, out);
  return out;
}

double mean_product(std::size_t n, const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t fs = field_size(n);
  double s = 0.0;
  for (std::size_t idx = 0; idx < a.size(); ++idx) s += (idx % fs == 0 ? 1.0 : 0.5) * a[idx] * b[idx];
  return s;
}

double energy(const CircleModel& u) {
  const Grid grid(u.mode_cutoff);
  const std::size_t fs = grid.fs;
  double quadratic = 0.0;
  for (std::size_t idx = 0; idx < u.size(); ++idx) {
    const double k = wavenumber(idx % fs);
    const double w = (idx % fs == 0) ? 1.0 : 0.5;
    quadratic += 0.5 * w * (k * k - u.lambda) * u.modes[idx] * u.modes[idx];
  }
  std::vector<double> u0, u1;
  grid.eval(u.modes, u0, u1);
  double quartic = 0.0;
  for (std::size_t j = 0; j < grid.m; ++j) {
    const double s = u0[j] * u0[j] + u1[j] * u1[j];
    quartic += 0.25 * s * s;
  }
  return quadratic + quartic / static_cast<double>(grid.m);
}

std::vector<double> jacobian(const CircleModel& u) {
  const Grid grid(u.mode_cutoff);
  const std::size_t fs = grid.fs;
  const std::size_t n = u.size();
  std::vector<double> jac(n * n, 0.0);
  std::vector<double> u0, u1;
  grid.eval(u.modes, u0, u1);
  std::vector<double> g0(grid.m), g1(grid.m), col(n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t f = c / fs, i = c % fs;
    // d(|u|²u)[v] = |u|²v + 2(u·v)u with v = basis_i in field f.
    for (std::size_t j = 0; j < grid.m; ++j) {
      const double v = grid.values[j * fs + i];
      const double v0 = f == 0 ? v : 0.0, v1 = f == 1 ? v : 0.0;
      const double s = u0[j] * u0[j] + u1[j] * u1[j];
      const double dot = u0[j] * v0 + u1[j] * v1;
      g0[j] = s * v0 + 2.0 * dot * u0[j];
      g1[j] = s * v1 + 2.0 * dot * u1[j];
    }
    std::fill(col.begin(), col.end(), 0.0);
    const double k = wavenumber(i);
    col[c] = k * k - u.lambda;
    grid.project(g0, g1, col);
    std::copy(col.begin(), col.end(), jac.begin() + static_cast<std::ptrdiff_t>(c * n));
  }
  return jac;
}

std::vector<double> normalized_spectrum_at_zero(std::size_t n, double lambda) {
  const CircleModel zero(n, lambda);
  const std::vector<double> jac = jacobian(zero);
  const std::size_t size = zero.size(), fs = field_size(n);
  std::vector<double> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    const double k = wavenumber(i % fs);
    out[i] = jac[i * size + i] / (1.0 + k * k);
  }
  return out;
}

std::vector<double> stability_scan(std::size_t n, double lo, double hi, std::size_t steps) {
  if (!(lo < hi)) throw RefusalError(ErrorCode::kPrecondition, "scan needs lo < hi");
  if (steps < 1) throw RefusalError(ErrorCode::kPrecondition, "scan needs steps >= 1");
  const auto needed = static_cast<std::size_t>(std::ceil(std::sqrt(std::max(hi, 0.0)))) + 2;
  if (n < needed) {
    throw RefusalError(ErrorCode::kCutoffInsufficient,
                       "mode cutoff N=" + std::to_string(n) + " too small for hi; need N >= " +
                           std::to_string(needed));
  }
  const std::size_t size = 2 * field_size(n);
  auto sign = [](double x) { return (x > 0) - (x < 0); };
  auto at = [&](double lam) { return normalized_spectrum_at_zero(n, lam); };

  std::vector<double> crossings;
  std::vector<double> prev = at(lo);
  double prev_lam = lo;
  for (std::size_t s = 1; s <= steps; ++s) {
    const double lam = lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(steps);
    const std::vector<double> cur = at(lam);
    for (std::size_t i = 0; i < size; ++i) {
      const int sa = sign(prev[i]), sb = sign(cur[i]);
      if (sa == sb) continue;
      double a = prev_lam, b = lam;
      if (sa == 0) b = a;
      else if (sb == 0) a = b;
      while (b - a > 1e-7) {
        const double mid = 0.5 * (a + b);
        const int sm = sign(at(mid)[i]);
        if (sm == 0) a = b = mid;
        else if (sm == sa) a = mid;
        else b = mid;
      }
      crossings.push_back(0.5 * (a + b));
    }
    prev = cur;
    prev_lam = lam;
  }
  std::sort(crossings.begin(), crossings.end());
  std::vector<double> unique;
  for (double c : crossings)
    if (unique.empty() || c - unique.back() > 1e-6) unique.push_back(c);
  return unique;
}

CircleModel exact_ansatz(std::size_t n, std::size_t k, double lambda) {
  CircleModel u(n, lambda);
  const double c = std::sqrt(std::max(lambda - static_cast<double>(k * k), 0.0));
  u.modes[mode_index(n, 0, k, false)] = c;
  u.modes[mode_index(n, 1, k, true)] = c;
  return u;
}

double amplitude(const CircleModel& u) {
  const Grid grid(u.mode_cutoff);
  std::vector<double> u0, u1;
  grid.eval(u.modes, u0, u1);
  double s = 0.0;
  for (std::size_t j = 0; j < grid.m; ++j) s += u0[j] * u0[j] + u1[j] * u1[j];
  return std::sqrt(s / static_cast<double>(grid.m));
}

CircleModel act(const CircleModel& u, double shift, double phase) {
  const std::size_t n = u.mode_cutoff;
  CircleModel shifted = u;
  for (int f = 0; f < 2; ++f)
    for (std::size_t k = 1; k <= n; ++k) {
      const double a = u.modes[mode_index(n, f, k, false)];
      const double b = u.modes[mode_index(n, f, k, true)];
      const double c = std::cos(static_cast<double>(k) * shift);
      const double s = std::sin(static_cast<double>(k) * shift);
      // cos k(θ+t) = cos kt cos kθ − sin kt sin kθ
      shifted.modes[mode_index(n, f, k, false)] = a * c + b * s;
      shifted.modes[mode_index(n, f, k, true)] = b * c - a * s;
    }
  CircleModel out = shifted;
  const double c = std::cos(phase), s = std::sin(phase);
  const std::size_t fs = field_size(n);
  for (std::size_t i = 0; i < fs; ++i) {
    const double x = shifted.modes[i], y = shifted.modes[fs + i];
    out.modes[i] = c * x - s * y;
    out.modes[fs + i] = s * x + c * y;
  }
  return out;
}

double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

BranchResult newton_branch(std::size_t k, double lambda, std::size_t n, int max_iterations) {
  if (k < 1) throw RefusalError(ErrorCode::kPrecondition, "mode index k must be >= 1");
  if (!(lambda > static_cast<double>(k * k))) {
    throw RefusalError(ErrorCode::kPrecondition,
                       "lambda must exceed k^2 = " + std::to_string(k * k));
  }
  if (n < k + 2) throw RefusalError(ErrorCode::kCutoffInsufficient, "need N >= k + 2");

  BranchResult out;
  out.state = CircleModel(n, lambda);
  CircleModel& u = out.state;
  u.modes[mode_index(n, 0, k, false)] = 0.1;
  u.modes[mode_index(n, 1, k, true)] = 0.1;
  const std::size_t pin = mode_index(n, 0, k, true);
  const auto size = static_cast<Eigen::Index>(u.size());

  std::vector<double> r = residual(u);
  out.residual_norm = sup_norm(r);
  for (int it = 0; it < max_iterations && out.residual_norm >= 1e-12; ++it) {
    const std::vector<double> jac = jacobian(u);
    // Bordered system [J; e_pin^T] d = [−R; 0], solved in the least-squares sense.
    Eigen::MatrixXd a(size + 1, size);
    a.topRows(size) = Eigen::Map<const Eigen::MatrixXd>(jac.data(), size, size);
    a.row(size).setZero();
    a(size, static_cast<Eigen::Index>(pin)) = 1.0;
    Eigen::VectorXd rhs(size + 1);
    for (Eigen::Index i = 0; i < size; ++i) rhs(i) = -r[static_cast<std::size_t>(i)];
    rhs(size) = 0.0;
    const Eigen::VectorXd d = a.colPivHouseholderQr().solve(rhs);

    // Deflation M(u) = 1 + 1/|u|²: Newton on M·R has step τ·d with
    // τ = M / (M − ∇M·d).
    const Eigen::Map<const Eigen::VectorXd> x(u.modes.data(), size);
    const double norm2 = x.squaredNorm();
    const double m = 1.0 + 1.0 / norm2;
    const double grad_dot_d = -2.0 * x.dot(d) / (norm2 * norm2);
    const double tau = m / (m - grad_dot_d);

    for (Eigen::Index i = 0; i < size; ++i) u.modes[static_cast<std::size_t>(i)] += tau * d(i);
    r = residual(u);
    out.residual_norm = sup_norm(r);
    out.iterations = it + 1;
    if (!std::isfinite(out.residual_norm)) break;
  }
  out.converged = out.residual_norm < 1e-12;
  out.amplitude = amplitude(u);
  return out;
}

}  // namespace eqbif
