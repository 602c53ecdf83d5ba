#include "eqbif/spectra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqbif {

const char* n2_method_name(N2Method m) {
  switch (m) {
    case N2Method::kNone: return "none";
    case N2Method::kIrreducibleFlags: return "irreducible-flags";
    case N2Method::kTorusFixedPoints: return "torus-fixed-points";
  }
  return "none";
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return InputError(ErrorCode::kMalformedInput,
                      "not a rational \"num/den\" or integer: \"" + text + "\"");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::vector<LaplaceEigenData> flat_torus_spectrum(std::size_t d, std::int64_t cutoff) {
  std::map<std::int64_t, TorusRep> by_norm;
  if (d == 0 || cutoff < 0) return {};
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= cutoff) ++bound;

  Weight m(d, -bound);
  for (;;) {
    std::int64_t norm = 0;
    for (auto x : m) norm += x * x;
    // Each ± pair is visited twice; keep only the sign-canonical member.
    if (norm <= cutoff && (is_zero_weight(m) || sign_canonical(m) == m)) {
      auto [it, _] = by_norm.try_emplace(norm, TorusRep(d));
      it->second.add(m, 1);
    }
    std::size_t i = 0;
    while (i < d && m[i] == bound) m[i++] = -bound;
    if (i == d) break;
    ++m[i];
  }

  std::vector<LaplaceEigenData> out;
  for (auto& [norm, rep] : by_norm) {
    LaplaceEigenData e{Rational(static_cast<long>(norm)), rep, false, std::nullopt};
    if (norm > 0 && rep.trivial_mult() == 0 && rep.weights().size() == 1 &&
        rep.weights().begin()->second == 1) {
      e.irreducible_nontrivial = true;
      e.highest_weight = rep.weights().begin()->first;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LaplaceEigenData> sphere_spectrum(std::size_t n, std::int64_t cutoff_k) {
  if (n < 2) throw InputError(ErrorCode::kPrecondition, "sphere_spectrum needs n >= 2");
  const std::size_t l = n / 2;
  // Complex weights of the standard representation C^n restricted to T^l.
  std::vector<Weight> basis;
  for (std::size_t i = 0; i < l; ++i) {
    Weight e(l, 0);
    e[i] = 1;
    basis.push_back(e);
    e[i] = -1;
    basis.push_back(e);
  }
  if (n % 2 == 1) basis.emplace_back(l, 0);

  // sym[j] = weight multiset of Sym^j, built one basis weight at a time.
  const std::size_t top = cutoff_k < 0 ? 0 : static_cast<std::size_t>(cutoff_k);
  std::vector<std::map<Weight, std::int64_t>> sym(top + 1);
  sym[0][Weight(l, 0)] = 1;
  for (const auto& b : basis) {
    // next[deg] = Σ_j sym[deg-j] shifted by j·b; next[deg-1] already holds
    // every count of b, so one shift per degree suffices.
    std::vector<std::map<Weight, std::int64_t>> next(top + 1);
    for (std::size_t deg = 0; deg <= top; ++deg) {
      next[deg] = sym[deg];
      if (deg == 0) continue;
      for (const auto& [w, c] : next[deg - 1]) {
        Weight shifted = w;
        for (std::size_t i = 0; i < l; ++i) shifted[i] += b[i];
        next[deg][shifted] += c;
      }
    }
    sym = std::move(next);
  }

  std::vector<LaplaceEigenData> out;
  for (std::size_t k = 0; k <= top && cutoff_k >= 0; ++k) {
    std::map<Weight, std::int64_t> harm = sym[k];
    if (k >= 2)
      for (const auto& [w, c] : sym[k - 2]) harm[w] -= c;
    TorusRep rep(l);
    for (const auto& [w, c] : harm) {
      if (c < 0) throw ConsistencyError(ErrorCode::kRouteMismatch, "negative harmonic weight count");
      if (c == 0) continue;
      if (is_zero_weight(w)) rep.add(w, c);
      else if (sign_canonical(w) == w) rep.add(w, c);
    }
    const auto kk = static_cast<long>(k);
    LaplaceEigenData e{Rational(kk * (kk + static_cast<long>(n) - 2)), rep, k > 0,
                       std::nullopt};
    Weight nu(l, 0);
    nu[0] = static_cast<std::int64_t>(k);
    if (k > 0) e.highest_weight = nu;
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

bool contains_weight(const TorusRep& v, const Weight& w) {
  return v.multiplicity(w) > 0;
}

}  // namespace

ValidationReport validate(const ProblemSpec& spec) {
  ValidationReport rep;
  auto err = [&](ErrorCode code, std::string msg) {
    rep.structural_errors.push_back({code, std::move(msg)});
  };

  if (spec.r < 1) err(ErrorCode::kMalformedInput, "r must be >= 1");
  if (spec.l < 1) err(ErrorCode::kMalformedInput, "l must be >= 1");
  if (spec.matrix_spectrum.empty()) err(ErrorCode::kMalformedInput, "empty matrix spectrum");
  if (spec.beta_cutoff < 0) err(ErrorCode::kMalformedInput, "beta_cutoff must be >= 0");

  std::int64_t dim_sum = 0;
  std::set<Rational> alphas;
  for (std::size_t j = 0; j < spec.matrix_spectrum.size(); ++j) {
    const auto& e = spec.matrix_spectrum[j];
    const std::string where = "matrix_spectrum[" + std::to_string(j) + "]";
    if (e.eigenspace.ambient_rank() != spec.r)
      err(ErrorCode::kRankMismatch, where + ": eigenspace is not a T^r-representation");
    if (e.eigenspace.dim() < 1) err(ErrorCode::kMalformedInput, where + ": empty eigenspace");
    if (!alphas.insert(e.alpha).second)
      err(ErrorCode::kMalformedInput, where + ": repeated eigenvalue " + e.alpha.get_str());
    if (e.marker && e.marker->size() != spec.r)
      err(ErrorCode::kLengthMismatch, where + ": marker length differs from r");
    dim_sum += e.eigenspace.dim();
  }
  if (dim_sum != spec.p)
    err(ErrorCode::kDimMismatch, "sum of eigenspace dimensions " + std::to_string(dim_sum) +
                                     " differs from p = " + std::to_string(spec.p));

  std::set<Rational> betas;
  for (std::size_t k = 0; k < spec.laplace_spectrum.size(); ++k) {
    const auto& e = spec.laplace_spectrum[k];
    const std::string where = "laplace[" + std::to_string(k) + "]";
    if (e.eigenspace.ambient_rank() != spec.l)
      err(ErrorCode::kRankMismatch, where + ": eigenspace is not a T^l-representation");
    if (e.eigenspace.dim() < 1) err(ErrorCode::kMalformedInput, where + ": empty eigenspace");
    if (e.beta < 0) err(ErrorCode::kMalformedInput, where + ": negative beta");
    if (e.beta > spec.beta_cutoff)
      err(ErrorCode::kCutoffInsufficient,
          where + ": beta " + e.beta.get_str() + " exceeds beta_cutoff " +
              spec.beta_cutoff.get_str());
    if (!betas.insert(e.beta).second)
      err(ErrorCode::kMalformedInput, where + ": repeated eigenvalue " + e.beta.get_str());
    if (e.highest_weight && e.highest_weight->size() != spec.l)
      err(ErrorCode::kLengthMismatch, where + ": highest weight length differs from l");
  }

  for (const auto* side : {&spec.degF_pos, &spec.degF_neg}) {
    const char* name = side == &spec.degF_pos ? "degF_pos" : "degF_neg";
    if (side->ambient_rank() != spec.r)
      err(ErrorCode::kRankMismatch, std::string(name) + " is not an element of U(T^r)");
    if (side->is_zero())
      err(ErrorCode::kB6Trivial, std::string(name) + " is Θ; the degree must be nontrivial");
  }

  rep.n1 = std::none_of(spec.matrix_spectrum.begin(), spec.matrix_spectrum.end(),
                        [](const MatrixEigenData& e) { return e.alpha == 0; });

  bool all_flagged = true, no_fixed = true;
  for (const auto& e : spec.laplace_spectrum) {
    if (e.beta == 0) continue;
    all_flagged = all_flagged && e.irreducible_nontrivial;
    no_fixed = no_fixed && e.eigenspace.trivial_mult() == 0;
  }
  if (all_flagged) {
    rep.n2 = true;
    rep.n2_method = N2Method::kIrreducibleFlags;
  } else if (no_fixed) {
    rep.n2 = true;
    rep.n2_method = N2Method::kTorusFixedPoints;
  }

  rep.e_holds = true;
  for (std::size_t j = 0; j < spec.matrix_spectrum.size() && rep.e_holds; ++j) {
    const auto& e = spec.matrix_spectrum[j];
    const std::string a = "alpha " + e.alpha.get_str();
    if (!e.marker || e.marker->size() != spec.r) {
      rep.e_holds = false;
      rep.e_reason = "(E) fails: no marker weight declared for " + a;
      break;
    }
    if (!contains_weight(e.eigenspace, *e.marker)) {
      rep.e_holds = false;
      rep.e_reason = "(E) fails: marker of " + a + " does not occur in its eigenspace";
      break;
    }
    for (std::size_t i = 0; i < spec.matrix_spectrum.size(); ++i) {
      if (i == j || spec.matrix_spectrum[i].eigenspace.ambient_rank() != spec.r) continue;
      if (contains_weight(spec.matrix_spectrum[i].eigenspace, *e.marker)) {
        rep.e_holds = false;
        rep.e_reason = "(E) fails: marker of " + a + " also occurs for alpha " +
                       spec.matrix_spectrum[i].alpha.get_str();
        break;
      }
    }
    if (rep.e_holds) rep.e_witnesses.push_back(*e.marker);
  }
  if (!rep.e_holds) rep.e_witnesses.clear();

  rep.highest_weights_ok = true;
  for (const auto& e : spec.laplace_spectrum) {
    if (e.beta == 0) continue;
    const std::string b = "beta " + e.beta.get_str();
    if (!e.irreducible_nontrivial || !e.highest_weight ||
        e.highest_weight->size() != spec.l) {
      rep.highest_weights_ok = false;
      rep.highest_weights_reason = b + " is not flagged irreducible with a highest weight";
      break;
    }
    if (is_zero_weight(*e.highest_weight) || !contains_weight(e.eigenspace, *e.highest_weight)) {
      rep.highest_weights_ok = false;
      rep.highest_weights_reason = b + ": highest weight does not occur in the eigenspace";
      break;
    }
    for (const auto& lower : spec.laplace_spectrum) {
      if (lower.beta >= e.beta || lower.eigenspace.ambient_rank() != spec.l) continue;
      if (contains_weight(lower.eigenspace, *e.highest_weight)) {
        rep.highest_weights_ok = false;
        rep.highest_weights_reason =
            b + ": highest weight already occurs at beta " + lower.beta.get_str();
        break;
      }
    }
    if (!rep.highest_weights_ok) break;
  }
  return rep;
}

void require_valid(const ProblemSpec& spec) {
  const ValidationReport rep = validate(spec);
  if (!rep.ok()) {
    std::string msg = "invalid problem:";
    for (const auto& e : rep.structural_errors) msg += " " + e.message + ";";
    throw InputError(rep.structural_errors.front().code, msg);
  }
}

Rational max_abs_alpha(const ProblemSpec& spec) {
  Rational best = 0;
  for (const auto& e : spec.matrix_spectrum) best = std::max(best, Rational(abs(e.alpha)));
  return best;
}

void require_cutoff(const ProblemSpec& spec, const Rational& level) {
  const Rational needed = abs(level) * max_abs_alpha(spec);
  if (spec.beta_cutoff < needed) {
    throw RefusalError(ErrorCode::kCutoffInsufficient,
                       "level " + level.get_str() + " needs beta_cutoff >= " +
                           needed.get_str() + ", have " + spec.beta_cutoff.get_str());
  }
}

ProblemSpec circle_quartic_problem(std::int64_t beta_cutoff) {
  ProblemSpec spec;
  spec.r = 1;
  spec.l = 1;
  spec.p = 2;
  spec.matrix_spectrum.push_back({Rational(1), TorusRep::irreducible({1}), Weight{1}});
  spec.laplace_spectrum = flat_torus_spectrum(1, beta_cutoff);
  spec.beta_cutoff = Rational(static_cast<long>(beta_cutoff));
  spec.degF_pos = EulerElement::unit(1);
  spec.degF_neg = EulerElement::unit(1) -
                  EulerElement::generator(subgroup_canonical(1, std::vector<IntVector>{{Integer(1)}}));
  return spec;
}

ProblemSpec sphere_scalar_problem(std::size_t n, std::int64_t cutoff_k) {
  ProblemSpec spec;
  spec.r = 1;
  spec.l = n / 2;
  spec.p = 1;
  spec.matrix_spectrum.push_back({Rational(1), TorusRep(1, 1), Weight{0}});
  spec.laplace_spectrum = sphere_spectrum(n, cutoff_k);
  spec.beta_cutoff = spec.laplace_spectrum.back().beta;
  spec.degF_pos = EulerElement::unit(1);
  spec.degF_neg = -EulerElement::unit(1);
  return spec;
}

}  // namespace eqbif
