#pragma once
// Candidate levels, kernel and negative-space representations, bifurcation
// indices and verdicts for a validated ProblemSpec. Every level is handled
// symbolically: V(λ0) and W(λ0 ± ε) are exact weight decompositions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqbif/eulerring.hpp"
#include "eqbif/spectra.hpp"
#include "eqbif/torusrep.hpp"

namespace eqbif {

struct Witness {
  std::size_t matrix_index;   // into matrix_spectrum
  std::size_t laplace_index;  // into laplace_spectrum
  Rational alpha;
  Rational beta;
};

struct CandidateLevel {
  Rational lambda0;
  std::vector<Witness> witnesses;
};

/// λ0 − ε or λ0 + ε.
enum class Side { kBelow, kAbove };

struct HessianEigenvalue {
  Rational eigenvalue;
  std::int64_t multiplicity;
  TorusRep rep;  // V_A(α) ⊗ V_{-Δ}(β) over T^{r+l}
  Rational alpha;
  Rational beta;
};

/// Which branch of the sufficient global-bifurcation argument applies.
enum class SufficientCase {
  kNone,
  kUnitCoefficient,     // n0 ≠ 0, nontrivial T^l-weights: codim-1 part
  kOddDimension,        // dim V(λ0) odd: coefficient −2 argument
  kIntersectionLemma,   // n0 = 0, dim V even, nontrivial T^l-weights
};
const char* sufficient_case_name(SufficientCase c);

struct UnboundednessCertificate {
  enum class Kind { kHighestWeight, kZeroLevel };
  Kind kind = Kind::kHighestWeight;
  Rational lambda0;
  // kHighestWeight fields.
  Weight weight;                    // (μ_{j0}, ν_{k0})
  std::optional<TorusSubgroup> h_star;
  Integer coefficient;              // of χ(H_*⁺) in BIF(λ0)
  Integer expected;                 // −sgn(λ0)·n0·(−1)^{dim W_outer}·m
  std::int64_t multiplicity = 0;    // m_{H_*}
  std::vector<Rational> excluded_levels;
  // kZeroLevel fields.
  std::int64_t p = 0;
};

struct CertificateResult {
  std::optional<UnboundednessCertificate> certificate;
  std::string reason;  // why the certificate is absent
};

struct Verdict {
  bool global_bifurcation = false;  // BIF ≠ Θ
  bool nontrivial_torus_hypothesis = false;  // some weight (m,n) with n ≠ 0
  bool odd_dimension_hypothesis = false;     // dim V(λ0) odd
  SufficientCase sufficient_case = SufficientCase::kNone;
  bool sufficient_theorem_applies = false;   // a case holds, λ0 ≠ 0, N1 or N2
  bool symmetry_breaking = false;
  std::optional<std::string> alternative;    // "local-or-global"
  std::optional<bool> zero_level_p_odd;      // only at λ0 = 0 under N1
  bool inconclusive = false;
  std::optional<UnboundednessCertificate> unbounded;
  std::string unbounded_reason;
};

struct LevelAnalysis {
  Rational lambda0;
  TorusRep v_rep;
  TorusRep w_below;
  TorusRep w_above;
  EulerElement bif_index;
  Verdict verdict;
};

/// All quotients β_k/α_j (α_j ≠ 0), ascending, with their witnesses.
std::vector<CandidateLevel> candidate_levels(const ProblemSpec& spec);

/// V(λ0): ⊕ V_A(α_j) ⊗ V_{-Δ}(β_k) over β_k = λ0·α_j, β_k ≠ 0.
TorusRep kernel_rep(const ProblemSpec& spec, const Rational& lambda0);

/// W(λ0 ± ε): ⊕ V_A(α_j) ⊗ V_{-Δ}(β_k) over β_k ≠ 0 with β_k < (λ0 ± ε)α_j.
TorusRep negative_rep(const ProblemSpec& spec, const Rational& lambda0, Side side);

/// Eigenvalues (β_k − λα_j)/(1 + β_k) of the Hessian at the trivial branch.
std::vector<HessianEigenvalue> hessian_spectrum(const ProblemSpec& spec,
                                                const Rational& lambda);

/// lift(degF(λ0+ε))⋆deg(W(λ0+ε)) − lift(degF(λ0−ε))⋆deg(W(λ0−ε)).
EulerElement bif_index_difference(const ProblemSpec& spec, const Rational& lambda0);

/// lift(degF_pos)⋆deg(W(λ0−ε))⋆(deg(V(λ0)) − 𝕀); λ0 > 0 only.
EulerElement bif_index_product(const ProblemSpec& spec, const Rational& lambda0);

/// Difference form, cross-checked against the product form for λ0 > 0.
EulerElement bif_index(const ProblemSpec& spec, const Rational& lambda0);

Verdict verdict(const ProblemSpec& spec, const Rational& lambda0);

CertificateResult unboundedness_certificate(const ProblemSpec& spec,
                                            const Rational& lambda0);

EulerElement sum_indices(const ProblemSpec& spec, const std::vector<Rational>& levels);

LevelAnalysis analyze_level(const ProblemSpec& spec, const Rational& lambda0);

struct LevelOutcome {
  Rational lambda0;
  std::optional<LevelAnalysis> analysis;
  std::string refusal;  // set when the cutoff does not cover the level
};

/// Every candidate level, analyzed in parallel; results ordered by level.
std::vector<LevelOutcome> analyze_all(const ProblemSpec& spec);

}  // namespace eqbif
