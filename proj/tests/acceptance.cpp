// Release acceptance: one PASS/FAIL line per criterion; exit status 1 on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "eqbif/bifurcation.hpp"
#include "eqbif/corroborate.hpp"
#include "eqbif/io.hpp"
#include "eqbif/oracle.hpp"

using namespace eqbif;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

std::string fixture(const char* name) { return std::string(EQBIF_FIXTURES) + "/" + name; }

TorusSubgroup h_of(std::vector<std::int64_t> k) {
  const std::size_t r = k.size();
  return subgroup_canonical(r, std::vector<std::vector<std::int64_t>>{std::move(k)});
}

void exact_algebra(Outcome& out) {
  const auto t0 = Clock::now();
  const SuiteResult snf = run_suite("intlat.snf_verification", 1, 500);
  const SuiteResult ring = run_suite("eulerring.ring_axioms", 1, 200);
  const double t = seconds_since(t0);
  out.require(snf.failures == 0, "snf: " + snf.first_counterexample);
  out.require(ring.failures == 0, "ring: " + ring.first_counterexample);
  out.require(t < 10.0, "runtime");
  out.detail << snf.trials << " SNF + " << ring.trials << " ring trials in " << t << " s";
}

void truncation(Outcome& out) {
  const SuiteResult r = run_suite("eulerring.truncation", 1, 100);
  out.require(r.failures == 0, r.first_counterexample);
  out.detail << r.trials << " reps, " << r.failures << " failures";
}

void dimension_lemma(Outcome& out) {
  const SuiteResult r = run_suite("intlat.dimension_lemma", 1, 200);
  out.require(r.failures == 0, r.first_counterexample);
  out.detail << r.trials << " instances, " << r.failures << " failures";
}

void circle_end_to_end(Outcome& out) {
  const ProblemSpec spec = parse_problem(fixture("circle_quartic.json"));
  std::vector<Rational> levels;
  for (const auto& c : candidate_levels(spec)) levels.push_back(c.lambda0);
  out.require(levels == std::vector<Rational>{Rational(0), Rational(1), Rational(4), Rational(9)},
              "candidate levels");

  EulerElement expected(2);
  expected.add_term(h_of({1, 1}), -1);
  expected.add_term(h_of({1, -1}), -1);
  expected.add_term(subgroup_canonical(2, std::vector<std::vector<std::int64_t>>{{1, 1}, {1, -1}}), 1);
  out.require(bif_index(spec, Rational(1)) == expected, "BIF(1) term-for-term");

  // k up to 5 needs the Laplace spectrum through 25.
  const ProblemSpec wide = circle_quartic_problem(25);
  for (std::int64_t k = 1; k <= 5; ++k) {
    const Rational q(k * k);
    const std::string at = "k=" + std::to_string(k);
    const TorusSubgroup hk = h_of({1, k});
    out.require(bif_index(wide, q).coefficient(hk) == -1, "coefficient at " + at);
    const Verdict v = verdict(wide, q);
    out.require(v.global_bifurcation, "global at " + at);
    out.require(v.symmetry_breaking, "symmetry breaking at " + at);
    out.require(v.unbounded.has_value() && v.unbounded->h_star && *v.unbounded->h_star == hk,
                "certificate at " + at);
  }
  const EulerElement sum = sum_indices(spec, {Rational(1), Rational(4)});
  out.require(sum.coefficient(h_of({1, 1})) == -1, "sum over {1,4}");
  out.detail << "levels {0,1,4,9}; k=1..5 checked";
}

void two_routes(Outcome& out) {
  int checked = 0;
  for (const char* name : {"circle_quartic.json", "sphere_scalar.json"}) {
    const ProblemSpec spec = parse_problem(fixture(name));
    for (const auto& c : candidate_levels(spec)) {
      if (c.lambda0 <= 0) continue;
      out.require(bif_index_difference(spec, c.lambda0) == bif_index_product(spec, c.lambda0),
                  std::string(name) + " at " + rational_to_string(c.lambda0));
      ++checked;
    }
  }
  out.detail << checked << " positive levels agree";
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

void sphere(Outcome& out) {
  const ProblemSpec spec = parse_problem(fixture("sphere_scalar.json"));
  for (std::int64_t k = 1; k <= 4; ++k) {
    const Rational q(k * (k + 1));
    const std::string at = "k=" + std::to_string(k);
    const TorusRep v = kernel_rep(spec, q);
    out.require(v.dim() == 2 * k + 1, "dim V at " + at);
    const Verdict verdict_k = verdict(spec, q);
    out.require(verdict_k.global_bifurcation && verdict_k.odd_dimension_hypothesis,
                "odd-dimension verdict at " + at);
  }
  for (long n = 3; n <= 5; ++n) {
    const auto s = sphere_spectrum(static_cast<std::size_t>(n), 6);
    for (long k = 0; k <= 6; ++k)
      out.require(s.at(static_cast<std::size_t>(k)).eigenspace.dim() == harmonic_dim(n, k) &&
                      harmonic_dim(n, k) == harmonic_dim_closed(n, k),
                  "provider n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  out.detail << "dim V = 3,5,7,9; providers n=3..5, k<=6";
}

void corroboration(Outcome& out) {
  const auto t0 = Clock::now();
  const auto crossings = stability_scan(8, 0.5, 5.0);
  out.require(crossings.size() == 2 && std::abs(crossings[0] - 1.0) < 1e-6 &&
                  std::abs(crossings[1] - 4.0) < 1e-6,
              "crossings");
  const BranchResult br = newton_branch(1, 1.5, 8);
  out.require(br.converged && br.iterations <= 10, "newton convergence");
  const double amp_err = std::abs(br.amplitude - std::sqrt(0.5));
  out.require(amp_err < 1e-8, "amplitude");
  const double ansatz = sup_norm(residual(exact_ansatz(8, 1, 1.5)));
  out.require(ansatz < 1e-12, "ansatz residual");
  const double t = seconds_since(t0);
  out.require(t < 5.0, "runtime");
  out.detail << "crossings";
  for (double c : crossings) out.detail << " " << c;
  out.detail << "; newton " << br.iterations << " its, |amp-sqrt(0.5)| = " << amp_err
             << "; ansatz residual " << ansatz << "; " << t << " s";
}

void mutation_gate(Outcome& out) {
  const SelfTestReport star = run_selftest(1, 100, {StarRule::kFlippedDimension, TensorRule::kStandard});
  const SelfTestReport tensor = run_selftest(1, 100, {StarRule::kStandard, TensorRule::kSignCollapsed});
  auto failing = [](const SelfTestReport& r) {
    std::string names;
    for (const auto& [name, s] : r.suites)
      if (s.failures > 0) names += (names.empty() ? "" : ",") + name;
    return names;
  };
  out.require(!star.passed(), "flipped star rule undetected");
  out.require(!tensor.passed(), "sign-collapsed tensor undetected");
  out.detail << "star -> {" << failing(star) << "}; tensor -> {" << failing(tensor) << "}";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"exact algebra suite", exact_algebra},
      {"truncation conformance", truncation},
      {"dimension count", dimension_lemma},
      {"circle-quartic end-to-end", circle_end_to_end},
      {"two-route index equality", two_routes},
      {"sphere fixture", sphere},
      {"numerical corroboration", corroboration},
      {"mutation gate", mutation_gate},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    std::printf("%s  %zu %s: %s\n", out.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                out.detail.str().c_str());
    if (!out.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
