#pragma once
// Brute-force verifiers and randomized property suites. Each suite is
// deterministic given its seed; failures are data, never exceptions.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eqbif/eulerring.hpp"
#include "eqbif/intlat.hpp"
#include "eqbif/spectra.hpp"
#include "eqbif/torusrep.hpp"

namespace eqbif {

/// Rules the suites run under; non-standard values are mutation checks.
struct SuiteRules {
  StarRule star = StarRule::kStandard;
  TensorRule tensor = TensorRule::kStandard;
};

struct SuiteResult {
  std::int64_t trials = 0;
  std::int64_t failures = 0;
  std::string first_counterexample;
};

struct SelfTestReport {
  std::map<std::string, SuiteResult> suites;

  bool passed() const;
  std::int64_t total_failures() const;
  /// Suite-by-suite merge; counts add, first counterexamples are kept.
  void merge(const SelfTestReport& other);
};

std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::int64_t trials,
                      const SuiteRules& rules = {});

/// Every registered suite; suites run concurrently, report order is by name.
SelfTestReport run_selftest(std::uint64_t seed, std::int64_t trials,
                            const SuiteRules& rules = {});

namespace oracle {

/// d_1···d_k = gcd of all k×k minors (by cofactor expansion).
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

/// Complex weights of the complexification: R[1,m] gives m and −m, R[1,0]
/// gives 0.
std::map<Weight, std::int64_t> complex_weights(const TorusRep& v);
/// Complex weights of W ⊗ V by pairwise concatenation (a, b) of the
/// factors' complex weights; independent of `tensor`.
std::map<Weight, std::int64_t> tensor_complex_weights(const TorusRep& w, const TorusRep& v);

// Random generators shared by the suites and the test binaries.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound);
TorusSubgroup random_subgroup(std::mt19937_64& rng, std::size_t r, int bound = 5);
EulerElement random_element(std::mt19937_64& rng, std::size_t r, std::size_t max_terms = 6,
                            int coeff_bound = 5);
TorusRep random_rep(std::mt19937_64& rng, std::size_t r, std::size_t max_weights = 3,
                    int bound = 5);
ProblemSpec random_problem(std::mt19937_64& rng);
/// Problems satisfying (E) over the flat circle or a sphere provider.
ProblemSpec random_symmetric_problem(std::mt19937_64& rng);

}  // namespace oracle

}  // namespace eqbif
