#pragma once
// Fourier–Galerkin model of −u″ = λu − |u|²u for u: S¹ → ℝ².
//
// Coefficient layout per field f ∈ {0,1}: [a_0, a_1, b_1, ..., a_N, b_N] with
// u_f(θ) = a_0 + Σ a_k cos kθ + b_k sin kθ; field f occupies the slice
// starting at f·(2N+1).

#include <cstddef>
#include <vector>

namespace eqbif {

struct CircleModel {
  std::size_t mode_cutoff = 0;  // N
  double lambda = 0.0;
  std::vector<double> modes;

  CircleModel() = default;
  CircleModel(std::size_t n, double lam);

  std::size_t size() const noexcept { return modes.size(); }
  /// Collocation points used for the cubic term (exact for degree ≤ 4N).
  std::size_t grid_size() const noexcept { return 4 * mode_cutoff + 4; }
};

std::size_t mode_index(std::size_t n, int field, std::size_t k, bool sine);

/// Galerkin coefficients of −u″ − λu + |u|²u.
std::vector<double> residual(const CircleModel& u);

/// Mean over the circle of ½|u′|² − ½λ|u|² + ¼|u|⁴.
double energy(const CircleModel& u);

/// ⟨a, b⟩ = mean of a(θ)·b(θ); weight 1 on a_0, ½ elsewhere.
double mean_product(std::size_t n, const std::vector<double>& a, const std::vector<double>& b);

/// Dense Jacobian of `residual`, column-major, size()×size().
std::vector<double> jacobian(const CircleModel& u);

/// Diagonal of the Jacobian at u = 0 divided by 1 + k².
std::vector<double> normalized_spectrum_at_zero(std::size_t n, double lambda);

/// λ values in [lo, hi] where some normalized eigenvalue at u = 0 changes
/// sign, bisected to 1e-6. Refuses when N < ⌈√hi⌉ + 2.
std::vector<double> stability_scan(std::size_t n, double lo, double hi, std::size_t steps = 200);

struct BranchResult {
  CircleModel state;
  double amplitude = 0.0;
  double residual_norm = 0.0;  // sup-norm of the coefficient residual
  int iterations = 0;
  bool converged = false;
};

/// Newton from 0.1·(cos kθ, sin kθ) with the sine coefficient of mode k in
/// field 0 pinned, deflating the trivial solution u = 0.
BranchResult newton_branch(std::size_t k, double lambda, std::size_t n = 8,
                           int max_iterations = 50);

/// √(λ−k²)·(cos kθ, sin kθ).
CircleModel exact_ansatz(std::size_t n, std::size_t k, double lambda);

/// RMS of |u| over the collocation grid.
double amplitude(const CircleModel& u);

/// u(θ) ↦ R_phase·u(θ + shift).
CircleModel act(const CircleModel& u, double shift, double phase);

double sup_norm(const std::vector<double>& v);

}  // namespace eqbif
