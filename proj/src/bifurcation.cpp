#include "eqbif/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <thread>

namespace eqbif {

const char* sufficient_case_name(SufficientCase c) {
  switch (c) {
    case SufficientCase::kNone: return "none";
    case SufficientCase::kUnitCoefficient: return "unit-coefficient";
    case SufficientCase::kOddDimension: return "odd-dimension";
    case SufficientCase::kIntersectionLemma: return "intersection-lemma";
  }
  return "none";
}

namespace {

int sign_of(const Rational& q) { return sgn(q); }

TorusRep pair_tensor(const ProblemSpec& spec, std::size_t j, std::size_t k) {
  return tensor(spec.matrix_spectrum[j].eigenspace, spec.laplace_spectrum[k].eigenspace);
}

// W at λ0 ± ε without choosing ε: the pair (α, β) is negative there iff
// β < λ0·α, or β = λ0·α and moving λ toward the side makes (λ0 ± ε)α > β.
bool negative_at(const Rational& alpha, const Rational& beta, const Rational& lambda0,
                 Side side) {
  const Rational edge = lambda0 * alpha;
  if (beta < edge) return true;
  if (beta > edge) return false;
  return side == Side::kAbove ? alpha > 0 : alpha < 0;
}

bool has_torus_weight(const TorusRep& v, std::size_t r) {
  for (const auto& [w, k] : v.weights())
    for (std::size_t i = r; i < w.size(); ++i)
      if (w[i] != 0) return true;
  return false;
}

}  // namespace

std::vector<CandidateLevel> candidate_levels(const ProblemSpec& spec) {
  const ValidationReport rep = validate(spec);
  if (!rep.ok()) {
    throw InputError(ErrorCode::kUnvalidatedSpec,
                     "candidate_levels on an invalid spec: " +
                         rep.structural_errors.front().message);
  }
  std::map<Rational, std::vector<Witness>> levels;
  for (std::size_t j = 0; j < spec.matrix_spectrum.size(); ++j) {
    const Rational& alpha = spec.matrix_spectrum[j].alpha;
    if (alpha == 0) continue;
    for (std::size_t k = 0; k < spec.laplace_spectrum.size(); ++k) {
      const Rational& beta = spec.laplace_spectrum[k].beta;
      Rational q = beta / alpha;
      q.canonicalize();
      levels[q].push_back({j, k, alpha, beta});
    }
  }
  std::vector<CandidateLevel> out;
  for (auto& [q, w] : levels) out.push_back({q, std::move(w)});
  return out;
}

TorusRep kernel_rep(const ProblemSpec& spec, const Rational& lambda0) {
  require_valid(spec);
  require_cutoff(spec, lambda0);
  TorusRep out(spec.r + spec.l);
  for (std::size_t j = 0; j < spec.matrix_spectrum.size(); ++j)
    for (std::size_t k = 0; k < spec.laplace_spectrum.size(); ++k) {
      const Rational& beta = spec.laplace_spectrum[k].beta;
      if (beta == 0 || beta != lambda0 * spec.matrix_spectrum[j].alpha) continue;
      out = direct_sum(out, pair_tensor(spec, j, k));
    }
  return out;
}

TorusRep negative_rep(const ProblemSpec& spec, const Rational& lambda0, Side side) {
  require_valid(spec);
  require_cutoff(spec, lambda0);
  TorusRep out(spec.r + spec.l);
  for (std::size_t j = 0; j < spec.matrix_spectrum.size(); ++j)
    for (std::size_t k = 0; k < spec.laplace_spectrum.size(); ++k) {
      const Rational& beta = spec.laplace_spectrum[k].beta;
      if (beta == 0) continue;
      if (negative_at(spec.matrix_spectrum[j].alpha, beta, lambda0, side))
        out = direct_sum(out, pair_tensor(spec, j, k));
    }
  return out;
}

std::vector<HessianEigenvalue> hessian_spectrum(const ProblemSpec& spec,
                                                const Rational& lambda) {
  require_valid(spec);
  std::vector<HessianEigenvalue> out;
  for (std::size_t j = 0; j < spec.matrix_spectrum.size(); ++j)
    for (std::size_t k = 0; k < spec.laplace_spectrum.size(); ++k) {
      const Rational& alpha = spec.matrix_spectrum[j].alpha;
      const Rational& beta = spec.laplace_spectrum[k].beta;
      Rational ev = (beta - lambda * alpha) / (1 + beta);
      ev.canonicalize();
      TorusRep rep = pair_tensor(spec, j, k);
      const std::int64_t mult = rep.dim();
      out.push_back({ev, mult, std::move(rep), alpha, beta});
    }
  return out;
}

EulerElement bif_index_difference(const ProblemSpec& spec, const Rational& lambda0) {
  const TorusRep w_above = negative_rep(spec, lambda0, Side::kAbove);
  const TorusRep w_below = negative_rep(spec, lambda0, Side::kBelow);
  // Sign of λ0 ± ε; at λ0 = 0 the two sides use different (B6) degrees.
  const int s = sign_of(lambda0);
  const EulerElement& deg_above = spec.degF(s == 0 ? 1 : s);
  const EulerElement& deg_below = spec.degF(s == 0 ? -1 : s);
  return star(lift(deg_above, spec.l), deg_minus_id(w_above)) -
         star(lift(deg_below, spec.l), deg_minus_id(w_below));
}

EulerElement bif_index_product(const ProblemSpec& spec, const Rational& lambda0) {
  if (lambda0 <= 0) {
    throw InputError(ErrorCode::kPrecondition, "product form is stated for λ0 > 0 only");
  }
  const TorusRep w_below = negative_rep(spec, lambda0, Side::kBelow);
  const TorusRep v = kernel_rep(spec, lambda0);
  const std::size_t rank = spec.r + spec.l;
  return star(star(lift(spec.degF_pos, spec.l), deg_minus_id(w_below)),
              deg_minus_id(v) - EulerElement::unit(rank));
}

EulerElement bif_index(const ProblemSpec& spec, const Rational& lambda0) {
  EulerElement primary = bif_index_difference(spec, lambda0);
  if (lambda0 > 0) {
    const EulerElement cross = bif_index_product(spec, lambda0);
    if (cross != primary) {
      throw ConsistencyError(ErrorCode::kRouteMismatch,
                             "bifurcation index routes disagree at " +
                                 lambda0.get_str() + ": " + primary.to_string() +
                                 " vs " + cross.to_string());
    }
  }
  return primary;
}

CertificateResult unboundedness_certificate(const ProblemSpec& spec,
                                            const Rational& lambda0) {
  const ValidationReport rep = validate(spec);
  if (!rep.ok()) {
    throw InputError(ErrorCode::kUnvalidatedSpec, rep.structural_errors.front().message);
  }
  require_cutoff(spec, lambda0);
  if (!rep.e_holds) return {std::nullopt, rep.e_reason};
  if (!rep.highest_weights_ok) return {std::nullopt, rep.highest_weights_reason};

  if (lambda0 == 0) {
    if (!rep.n1) return {std::nullopt, "zero level needs a nondegenerate origin (N1)"};
    if (spec.p % 2 == 0) return {std::nullopt, "zero level needs p odd"};
    UnboundednessCertificate cert;
    cert.kind = UnboundednessCertificate::Kind::kZeroLevel;
    cert.lambda0 = lambda0;
    cert.p = spec.p;
    return {cert, ""};
  }

  const int s = sign_of(lambda0);
  const Integer n0 = spec.degF(s).unit_coefficient();
  if (n0 == 0) return {std::nullopt, "degF has zero unit coefficient"};

  std::vector<Witness> witnesses;
  const auto levels = candidate_levels(spec);
  for (const auto& c : levels)
    if (c.lambda0 == lambda0) witnesses = c.witnesses;
  std::erase_if(witnesses, [](const Witness& w) { return w.beta == 0; });
  if (witnesses.empty()) return {std::nullopt, "level is not a candidate level"};

  const TorusRep v = kernel_rep(spec, lambda0);
  const TorusRep w_outer = negative_rep(spec, lambda0, s > 0 ? Side::kAbove : Side::kBelow);
  const EulerElement index = bif_index(spec, lambda0);

  for (const auto& wit : witnesses) {
    const Weight& mu = *spec.matrix_spectrum[wit.matrix_index].marker;
    const Weight& nu = *spec.laplace_spectrum[wit.laplace_index].highest_weight;
    Weight w = mu;
    w.insert(w.end(), nu.begin(), nu.end());
    Weight w_flip = mu;
    for (auto x : nu) w_flip.push_back(-x);

    UnboundednessCertificate cert;
    cert.kind = UnboundednessCertificate::Kind::kHighestWeight;
    cert.lambda0 = lambda0;
    cert.weight = w;
    cert.multiplicity = v.multiplicity(w);
    if (cert.multiplicity == 0) continue;

    bool excluded = true;
    for (const auto& c : levels) {
      const bool between = s > 0 ? (c.lambda0 > 0 && c.lambda0 < lambda0)
                                 : (c.lambda0 < 0 && c.lambda0 > lambda0);
      if (!between) continue;
      const TorusRep other = kernel_rep(spec, c.lambda0);
      if (other.multiplicity(w) > 0 || other.multiplicity(w_flip) > 0) {
        excluded = false;
        break;
      }
      cert.excluded_levels.push_back(c.lambda0);
    }
    if (!excluded) continue;

    const TorusSubgroup h_star = subgroup_canonical(spec.r + spec.l, {to_int_vector(w)});
    cert.h_star = h_star;
    cert.coefficient = index.coefficient(h_star);
    const Integer parity = w_outer.dim() % 2 == 0 ? 1 : -1;
    cert.expected = -Integer(s) * n0 * parity * Integer(static_cast<long>(cert.multiplicity));
    if (cert.coefficient != cert.expected) {
      throw ConsistencyError(ErrorCode::kRouteMismatch,
                             "coefficient at " + h_star.to_string() + " is " +
                                 cert.coefficient.get_str() + ", expected " +
                                 cert.expected.get_str());
    }
    return {cert, ""};
  }
  return {std::nullopt, "no witness pair yields an excluded highest weight"};
}

Verdict verdict(const ProblemSpec& spec, const Rational& lambda0) {
  const ValidationReport rep = validate(spec);
  if (!rep.ok()) {
    throw InputError(ErrorCode::kUnvalidatedSpec, rep.structural_errors.front().message);
  }
  Verdict out;
  const EulerElement index = bif_index(spec, lambda0);
  const TorusRep v = kernel_rep(spec, lambda0);
  out.global_bifurcation = !index.is_zero();
  out.inconclusive = index.is_zero();
  out.nontrivial_torus_hypothesis = has_torus_weight(v, spec.r);
  out.odd_dimension_hypothesis = v.dim() % 2 == 1;

  if (lambda0 != 0) {
    const Integer n0 = spec.degF(sign_of(lambda0)).unit_coefficient();
    if (out.nontrivial_torus_hypothesis) {
      if (n0 != 0) out.sufficient_case = SufficientCase::kUnitCoefficient;
      else if (out.odd_dimension_hypothesis) out.sufficient_case = SufficientCase::kOddDimension;
      else out.sufficient_case = SufficientCase::kIntersectionLemma;
    } else if (out.odd_dimension_hypothesis) {
      out.sufficient_case = SufficientCase::kOddDimension;
    }
    out.sufficient_theorem_applies =
        out.sufficient_case != SufficientCase::kNone && (rep.n1 || rep.n2);
  } else if (rep.n1) {
    out.zero_level_p_odd = spec.p % 2 == 1;
  }

  out.symmetry_breaking = rep.n2 && lambda0 != 0;
  if (!rep.n1 && !rep.n2) out.alternative = "local-or-global";

  CertificateResult cert = unboundedness_certificate(spec, lambda0);
  out.unbounded = std::move(cert.certificate);
  out.unbounded_reason = std::move(cert.reason);
  return out;
}

EulerElement sum_indices(const ProblemSpec& spec, const std::vector<Rational>& levels) {
  require_valid(spec);
  EulerElement total(spec.r + spec.l);
  for (const auto& q : levels) total += bif_index(spec, q);
  return total;
}

LevelAnalysis analyze_level(const ProblemSpec& spec, const Rational& lambda0) {
  LevelAnalysis a{lambda0,
                  kernel_rep(spec, lambda0),
                  negative_rep(spec, lambda0, Side::kBelow),
                  negative_rep(spec, lambda0, Side::kAbove),
                  bif_index(spec, lambda0),
                  {}};
  a.verdict = verdict(spec, lambda0);
  return a;
}

std::vector<LevelOutcome> analyze_all(const ProblemSpec& spec) {
  const auto levels = candidate_levels(spec);
  std::vector<LevelOutcome> out(levels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < levels.size(); i = next++) {
      LevelOutcome& slot = out[i];
      slot.lambda0 = levels[i].lambda0;
      try {
        slot.analysis = analyze_level(spec, slot.lambda0);
      } catch (const RefusalError& e) {
        slot.refusal = e.what();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(levels.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return out;
}

}  // namespace eqbif
