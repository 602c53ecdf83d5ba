#pragma once
// Problem data for -Δ_M u = ∇_u F(u, λ): the spectrum of A = ∇²_u F(0,1),
// the Laplace-Beltrami spectrum of M as torus representations, and the
// degrees of ∇_u F(·, λ) on either side of λ = 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqbif/errors.hpp"
#include "eqbif/eulerring.hpp"
#include "eqbif/intlat.hpp"
#include "eqbif/torusrep.hpp"

namespace eqbif {

struct MatrixEigenData {
  Rational alpha;
  TorusRep eigenspace;            // over T^r
  std::optional<Weight> marker;   // μ_j for condition (E)
};

struct LaplaceEigenData {
  Rational beta;
  TorusRep eigenspace;            // over T^l
  bool irreducible_nontrivial = false;
  std::optional<Weight> highest_weight;  // ν_k
};

struct ProblemSpec {
  std::size_t r = 1;
  std::size_t l = 1;
  std::int64_t p = 0;
  std::vector<MatrixEigenData> matrix_spectrum;
  std::vector<LaplaceEigenData> laplace_spectrum;  // complete up to beta_cutoff
  Rational beta_cutoff;
  EulerElement degF_pos{1};  // degree of ∇_u F(·,λ) for λ > 0
  EulerElement degF_neg{1};  // and for λ < 0

  const EulerElement& degF(int sign) const { return sign < 0 ? degF_neg : degF_pos; }
};

struct StructuralError {
  ErrorCode code;
  std::string message;
};

enum class N2Method { kNone, kIrreducibleFlags, kTorusFixedPoints };
const char* n2_method_name(N2Method m);

struct ValidationReport {
  bool n1 = false;
  bool n2 = false;
  N2Method n2_method = N2Method::kNone;
  bool e_holds = false;
  std::vector<Weight> e_witnesses;  // μ_j per matrix eigenvalue, when E holds
  std::string e_reason;
  /// Every β > 0 eigenspace is flagged irreducible and its declared ν_k
  /// occurs in it and in no lower eigenspace.
  bool highest_weights_ok = false;
  std::string highest_weights_reason;
  std::vector<StructuralError> structural_errors;

  bool ok() const { return structural_errors.empty(); }
};

/// Eigenvalues |m|² ≤ cutoff of the flat torus T^d = R^d / 2πZ^d.
std::vector<LaplaceEigenData> flat_torus_spectrum(std::size_t d, std::int64_t cutoff);

/// Eigenvalues k(k+n-2), k ≤ cutoff_k, of S^{n-1} with the weights of the
/// degree-k harmonics restricted to the maximal torus T^{⌊n/2⌋} of SO(n).
std::vector<LaplaceEigenData> sphere_spectrum(std::size_t n, std::int64_t cutoff_k);

ValidationReport validate(const ProblemSpec& spec);

/// Throws InputError (first structural error's code) unless the spec is valid.
void require_valid(const ProblemSpec& spec);

/// max |α_j| over the matrix spectrum.
Rational max_abs_alpha(const ProblemSpec& spec);

/// Refuses analysis at `level` unless beta_cutoff ≥ |level|·max|α_j|.
void require_cutoff(const ProblemSpec& spec, const Rational& level);

/// −u'' = λu − |u|²u on S¹, u ∈ R² with T¹ rotating the plane.
ProblemSpec circle_quartic_problem(std::int64_t beta_cutoff = 9);

/// −Δu = λu − u³ on S^{n-1} with a scalar field (p = 1, trivial T¹ action).
ProblemSpec sphere_scalar_problem(std::size_t n = 3, std::int64_t cutoff_k = 4);

/// Parses "num/den" or an integer; throws InputError otherwise.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

}  // namespace eqbif
