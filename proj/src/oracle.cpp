#include "eqbif/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include "eqbif/bifurcation.hpp"

namespace eqbif {

bool SelfTestReport::passed() const { return total_failures() == 0; }

std::int64_t SelfTestReport::total_failures() const {
  std::int64_t n = 0;
  for (const auto& [name, s] : suites) n += s.failures;
  return n;
}

void SelfTestReport::merge(const SelfTestReport& other) {
  for (const auto& [name, s] : other.suites) {
    auto& mine = suites[name];
    mine.trials += s.trials;
    mine.failures += s.failures;
    if (mine.first_counterexample.empty()) mine.first_counterexample = s.first_counterexample;
  }
}

namespace oracle {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void combinations(std::size_t n, std::size_t k,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Cofactor expansion; independent of the Bareiss determinant.
Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(i - 1, cc++) = a(i, c);
    Integer term = a(0, j) * cofactor_det(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

}  // namespace

std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  std::vector<Integer> gcds;  // gcd of k×k minors, k = 1..
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    combinations(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      combinations(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Integer d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    gcds.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 0; k < gcds.size(); ++k)
    factors.push_back(k == 0 ? gcds[0] : Integer(gcds[k] / gcds[k - 1]));
  return factors;
}

std::map<Weight, std::int64_t> complex_weights(const TorusRep& v) {
  std::map<Weight, std::int64_t> out;
  if (v.trivial_mult() > 0) out[Weight(v.ambient_rank(), 0)] += v.trivial_mult();
  for (const auto& [m, k] : v.weights()) {
    out[m] += k;
    Weight neg = m;
    for (auto& x : neg) x = -x;
    out[neg] += k;
  }
  return out;
}

std::map<Weight, std::int64_t> tensor_complex_weights(const TorusRep& w, const TorusRep& v) {
  std::map<Weight, std::int64_t> out;
  for (const auto& [a, ka] : complex_weights(w))
    for (const auto& [b, kb] : complex_weights(v)) {
      Weight ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      out[ab] += ka * kb;
    }
  return out;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, int bound) {
  const auto rows = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_dim)));
  const auto cols = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_dim)));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

TorusSubgroup random_subgroup(std::mt19937_64& rng, std::size_t r, int bound) {
  const int count = uniform(rng, 0, static_cast<int>(r));
  std::vector<IntVector> chars;
  for (int c = 0; c < count; ++c) {
    IntVector k(r);
    for (auto& x : k) x = uniform(rng, -bound, bound);
    chars.push_back(std::move(k));
  }
  return subgroup_canonical(r, chars);
}

EulerElement random_element(std::mt19937_64& rng, std::size_t r, std::size_t max_terms,
                            int coeff_bound) {
  EulerElement x(r);
  const int terms = uniform(rng, 0, static_cast<int>(max_terms));
  for (int t = 0; t < terms; ++t)
    x.add_term(random_subgroup(rng, r), uniform(rng, -coeff_bound, coeff_bound));
  return x;
}

TorusRep random_rep(std::mt19937_64& rng, std::size_t r, std::size_t max_weights, int bound) {
  TorusRep v(r, uniform(rng, 0, 2));
  const int count = uniform(rng, 0, static_cast<int>(max_weights));
  for (int c = 0; c < count; ++c) {
    Weight m(r);
    for (auto& x : m) x = uniform(rng, -bound, bound);
    v.add(m, uniform(rng, 1, 2));
  }
  return v;
}

namespace {

EulerElement random_nonzero_degree(std::mt19937_64& rng, std::size_t r) {
  for (;;) {
    EulerElement x(r);
    x.add_term(TorusSubgroup(r), uniform(rng, -1, 2));
    const int extra = uniform(rng, 0, 2);
    for (int t = 0; t < extra; ++t) {
      TorusSubgroup h = random_subgroup(rng, r, 3);
      if (!h.is_full()) x.add_term(h, uniform(rng, -2, 2));
    }
    if (!x.is_zero()) return x;
  }
}

TorusRep nonempty_rep(std::mt19937_64& rng, std::size_t r, std::size_t max_weights, int bound) {
  for (;;) {
    TorusRep v = random_rep(rng, r, max_weights, bound);
    if (v.dim() > 0) return v;
  }
}

}  // namespace

ProblemSpec random_problem(std::mt19937_64& rng) {
  ProblemSpec spec;
  spec.r = static_cast<std::size_t>(uniform(rng, 1, 2));
  spec.l = static_cast<std::size_t>(uniform(rng, 1, 3 - static_cast<int>(spec.r)));

  static const std::vector<Rational> alphas = {Rational(-2), Rational(-1), Rational(1, 2),
                                               Rational(1),  Rational(2),  Rational(0)};
  std::vector<Rational> pool = alphas;
  std::shuffle(pool.begin(), pool.end(), rng);
  const int count = uniform(rng, 1, 2);
  std::int64_t p = 0;
  for (int j = 0; j < count; ++j) {
    // α = 0 only occasionally.
    if (pool[static_cast<std::size_t>(j)] == 0 && uniform(rng, 0, 3) != 0) {
      pool[static_cast<std::size_t>(j)] = Rational(3);
    }
    MatrixEigenData e{pool[static_cast<std::size_t>(j)], nonempty_rep(rng, spec.r, 2, 2),
                      std::nullopt};
    p += e.eigenspace.dim();
    spec.matrix_spectrum.push_back(std::move(e));
  }
  spec.p = p;

  spec.laplace_spectrum.push_back({Rational(0), TorusRep(spec.l, 1), false, std::nullopt});
  int beta = 0;
  const int levels = uniform(rng, 1, 3);
  for (int k = 0; k < levels; ++k) {
    beta += uniform(rng, 1, 3);
    TorusRep rep = nonempty_rep(rng, spec.l, 2, 2);
    LaplaceEigenData e{Rational(beta), rep, false, std::nullopt};
    if (rep.trivial_mult() == 0 && rep.weights().size() == 1 &&
        rep.weights().begin()->second == 1) {
      e.irreducible_nontrivial = true;
      e.highest_weight = rep.weights().begin()->first;
    }
    spec.laplace_spectrum.push_back(std::move(e));
  }
  spec.beta_cutoff = Rational(beta);
  spec.degF_pos = random_nonzero_degree(rng, spec.r);
  spec.degF_neg = uniform(rng, 0, 1) ? spec.degF_pos : random_nonzero_degree(rng, spec.r);
  return spec;
}

ProblemSpec random_symmetric_problem(std::mt19937_64& rng) {
  ProblemSpec spec;
  spec.r = 1;
  const int provider = uniform(rng, 0, 2);
  if (provider == 0) {
    spec.l = 1;
    spec.laplace_spectrum = flat_torus_spectrum(1, uniform(rng, 4, 16));
  } else {
    const auto n = static_cast<std::size_t>(uniform(rng, 3, 5));
    spec.l = n / 2;
    spec.laplace_spectrum = sphere_spectrum(n, uniform(rng, 1, 3));
  }
  spec.beta_cutoff = spec.laplace_spectrum.back().beta;

  static const std::vector<Rational> alphas = {Rational(-1), Rational(1), Rational(2),
                                               Rational(1, 2)};
  std::vector<Rational> pool = alphas;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::int64_t> markers = {0, 1, 2, 3};
  std::shuffle(markers.begin(), markers.end(), rng);
  const int count = uniform(rng, 1, 2);
  std::int64_t p = 0;
  for (int j = 0; j < count; ++j) {
    const Weight mu{markers[static_cast<std::size_t>(j)]};
    TorusRep rep = TorusRep::irreducible(mu);
    p += rep.dim();
    spec.matrix_spectrum.push_back({pool[static_cast<std::size_t>(j)], rep, mu});
  }
  spec.p = p;
  // Nondegenerate origin: unit coefficient ±1 plus a lower-order tail.
  for (auto* deg : {&spec.degF_pos, &spec.degF_neg}) {
    *deg = EulerElement::unit(1);
    if (uniform(rng, 0, 1)) *deg = -*deg;
    if (uniform(rng, 0, 1))
      deg->add_term(subgroup_canonical(1, {IntVector{Integer(uniform(rng, 1, 3))}}),
                    uniform(rng, -2, 2));
  }
  return spec;
}

}  // namespace oracle

namespace {

using Rng = std::mt19937_64;
// A trial returns an empty string on success, else a serialized counterexample.
using Trial = std::function<std::string(Rng&, const SuiteRules&)>;

std::string show(const EulerElement& x) {
  return "U(T^" + std::to_string(x.ambient_rank()) + "): " + x.to_string();
}

std::string check_snf(Rng& rng, const SuiteRules&) {
  const IntMatrix m = oracle::random_matrix(rng, 6, 20);
  const SmithDecomposition s = snf(m);
  std::string bad;
  if (s.P * m * s.Q != s.D) bad = "P·R·Q != D";
  else if (abs(s.P.determinant()) != 1 || abs(s.Q.determinant()) != 1) bad = "not unimodular";
  else if (s.Q * s.Q_inverse != IntMatrix::identity(m.cols())) bad = "Q_inverse wrong";
  for (std::size_t i = 0; bad.empty() && i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j) {
      const bool diag = i == j && i < s.invariant_factors.size();
      if (diag ? s.D(i, j) != s.invariant_factors[i] : s.D(i, j) != 0) {
        bad = "D not in Smith form";
        break;
      }
    }
  for (std::size_t i = 0; bad.empty() && i < s.invariant_factors.size(); ++i) {
    if (s.invariant_factors[i] <= 0) bad = "nonpositive invariant factor";
    else if (i + 1 < s.invariant_factors.size() &&
             !mpz_divisible_p(s.invariant_factors[i + 1].get_mpz_t(),
                              s.invariant_factors[i].get_mpz_t()))
      bad = "divisibility chain broken";
  }
  return bad.empty() ? "" : bad + " for R = " + m.to_string();
}

std::string check_snf_minors(Rng& rng, const SuiteRules&) {
  const IntMatrix m = oracle::random_matrix(rng, 4, 9);
  const auto expected = oracle::invariant_factors_by_minors(m);
  if (snf(m).invariant_factors != expected) return "invariant factors differ for R = " + m.to_string();
  return "";
}

std::string check_canonical(Rng& rng, const SuiteRules&) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
  std::vector<IntVector> chars;
  const int count = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int c = 0; c < count; ++c) {
    IntVector k(r);
    for (auto& x : k) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    chars.push_back(k);
  }
  const TorusSubgroup h = subgroup_canonical(r, chars);
  std::vector<IntVector> shuffled = chars;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  // Adding an integer combination of the generators changes nothing.
  IntVector combo(r, Integer(0));
  for (const auto& k : chars) {
    const int c = std::uniform_int_distribution<int>(-3, 3)(rng);
    for (std::size_t i = 0; i < r; ++i) combo[i] += c * k[i];
  }
  shuffled.push_back(combo);
  if (subgroup_canonical(r, shuffled) != h) return "order/combination dependence for " + h.to_string();
  if (subgroup_canonical(r, h.characters()) != h) return "not idempotent: " + h.to_string();
  return "";
}

std::string check_intersection_laws(Rng& rng, const SuiteRules&) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
  const auto a = oracle::random_subgroup(rng, r);
  const auto b = oracle::random_subgroup(rng, r);
  const auto c = oracle::random_subgroup(rng, r);
  const auto ab = subgroup_intersect(a, b);
  std::string where = a.to_string() + ", " + b.to_string() + ", " + c.to_string();
  if (ab != subgroup_intersect(b, a)) return "not commutative: " + where;
  if (subgroup_intersect(ab, c) != subgroup_intersect(a, subgroup_intersect(b, c)))
    return "not associative: " + where;
  if (ab.dim() > std::min(a.dim(), b.dim())) return "dimension grew: " + where;
  if (subgroup_intersect(a, TorusSubgroup(r)) != a) return "T^r is not neutral: " + where;
  return "";
}

std::string check_dimension_lemma(Rng& rng, const SuiteRules&) {
  const int r_int = std::uniform_int_distribution<int>(1, 3)(rng);
  const std::size_t r = static_cast<std::size_t>(r_int);
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4 - r_int)(rng));
  const auto h = oracle::random_subgroup(rng, r);
  IntVector mn(r + l);
  bool n_nonzero = false;
  while (!n_nonzero) {
    for (auto& x : mn) x = std::uniform_int_distribution<int>(-5, 5)(rng);
    for (std::size_t i = r; i < r + l; ++i) n_nonzero = n_nonzero || mn[i] != 0;
  }
  const auto meet = subgroup_intersect(extend_by_full_torus(h, l), subgroup_canonical(r + l, {mn}));
  if (meet.dim() + 1 != l + h.dim()) {
    return "dim((H×T^l)∩H_(m,n)) = " + std::to_string(meet.dim()) + " for H = " + h.to_string() +
           ", l = " + std::to_string(l);
  }
  return "";
}

std::string check_codim_generators(Rng& rng, const SuiteRules&) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rng));
  const auto h = oracle::random_subgroup(rng, r);
  const auto gens = codim_generators(h);
  if (gens.size() != h.codim()) return "wrong generator count for " + h.to_string();
  if (subgroup_canonical(r, gens) != h) return "generators do not cut out " + h.to_string();
  return "";
}

std::string check_contains_group(Rng& rng, const SuiteRules&) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
  const auto h = oracle::random_subgroup(rng, r);
  // Members: sample q = Σ c_i g_i with g_i a rational basis of H's points.
  // Points of H: θ-coordinates q = Q·t with d_j t_j ∈ Z.
  const SmithDecomposition s = snf(h.annihilator().basis());
  auto sample = [&]() {
    RatVector t(r);
    for (std::size_t j = 0; j < r; ++j) {
      if (j < s.invariant_factors.size()) {
        t[j] = Rational(std::uniform_int_distribution<int>(-6, 6)(rng)) /
               Rational(s.invariant_factors[j]);
      } else {
        t[j] = Rational(std::uniform_int_distribution<int>(-12, 12)(rng), 7);
      }
    }
    RatVector q(r, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) q[i] += Rational(s.Q(i, j)) * t[j];
    for (auto& x : q) x.canonicalize();
    return q;
  };
  const RatVector a = sample(), b = sample();
  RatVector sum(r), neg(r);
  for (std::size_t i = 0; i < r; ++i) {
    sum[i] = a[i] + b[i];
    neg[i] = -a[i];
  }
  if (!contains(h, a) || !contains(h, b)) return "sampled member rejected by " + h.to_string();
  if (!contains(h, sum) || !contains(h, neg)) return "not closed under +/− in " + h.to_string();
  if (!contains(h, RatVector(r, Rational(0)))) return "identity missing from " + h.to_string();
  return "";
}

std::string check_intersection_lemma(Rng& rng, const SuiteRules&) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  auto random_mn = [&](bool n_zero) {
    for (;;) {
      IntVector v(r + l, Integer(0));
      for (std::size_t i = 0; i < r; ++i) v[i] = std::uniform_int_distribution<int>(-3, 3)(rng);
      bool nz = false;
      if (!n_zero)
        for (std::size_t i = r; i < r + l; ++i) {
          v[i] = std::uniform_int_distribution<int>(-3, 3)(rng);
          nz = nz || v[i] != 0;
        }
      if (n_zero || nz) return v;
    }
  };
  const auto h = oracle::random_subgroup(rng, r, 3);
  const bool same_h = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const auto h2 = same_h ? h : oracle::random_subgroup(rng, r, 3);
  const int mode = std::uniform_int_distribution<int>(0, 2)(rng);
  const IntVector mn = random_mn(mode == 0);
  IntVector mn2 = random_mn(mode == 1);
  if (mode == 2 && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    mn2 = mn;
    for (auto& x : mn2) x = -x;
  }
  const auto meet = subgroup_intersect(extend_by_full_torus(h, l), subgroup_canonical(r + l, {mn}));
  const auto meet2 = subgroup_intersect(extend_by_full_torus(h2, l), subgroup_canonical(r + l, {mn2}));
  if (mode < 2 && meet == meet2) return "part (1) violated for " + h.to_string() + ", " + h2.to_string();
  if (mode == 2 && meet == meet2 && h != h2)
    return "part (2) violated for " + h.to_string() + ", " + h2.to_string();
  return "";
}

std::string check_ring_axioms(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
  const auto x = oracle::random_element(rng, r);
  const auto y = oracle::random_element(rng, r);
  const auto z = oracle::random_element(rng, r);
  const auto one = EulerElement::unit(r);
  auto mul = [&](const EulerElement& a, const EulerElement& b) { return star(a, b, rules.star); };
  const std::string where = show(x) + " | " + show(y) + " | " + show(z);
  if (mul(x, y) != mul(y, x)) return "commutativity: " + where;
  if (mul(mul(x, y), z) != mul(x, mul(y, z))) return "associativity: " + where;
  const Integer a = std::uniform_int_distribution<int>(-3, 3)(rng);
  const Integer b = std::uniform_int_distribution<int>(-3, 3)(rng);
  const std::vector<Integer> coeffs{a, b};
  const std::vector<EulerElement> yz{y, z};
  const std::vector<EulerElement> products{mul(x, y), mul(x, z)};
  if (mul(x, linear_combine(coeffs, yz)) != linear_combine(coeffs, products))
    return "distributivity: " + where;
  if (mul(one, x) != x || mul(x, one) != x) return "unit: " + where;
  return "";
}

std::string check_ideal(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(2, 3)(rng));
  const auto x = oracle::random_element(rng, r);
  EulerElement y(r);
  const EulerElement source = oracle::random_element(rng, r);
  for (const auto& [h, c] : source.terms())
    if (h.codim() >= 2) y.add_term(h, c);
  const EulerElement product = star(x, y, rules.star);
  for (const auto& [h, c] : product.terms())
    if (h.codim() < 2) return "codim < 2 term in " + show(x) + " ⋆ " + show(y);
  return "";
}

std::string check_truncation(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
  const auto v = oracle::random_rep(rng, r, 4);
  const auto deg = deg_minus_id(v, rules.star);
  EulerElement expected = EulerElement::unit(r);
  for (const auto& [m, k] : v.weights())
    expected.add_term(subgroup_canonical(r, {to_int_vector(m)}), -k);
  if (v.dim() % 2 == 1) expected = -expected;
  if (codim_part(deg, 0) + codim_part(deg, 1) != expected)
    return "V = " + v.to_string() + ": " + show(deg);
  return "";
}

std::string check_multiplicativity(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng));
  const auto v = oracle::random_rep(rng, r, 3);
  const auto w = oracle::random_rep(rng, r, 3);
  if (deg_minus_id(direct_sum(v, w), rules.star) !=
      star(deg_minus_id(v, rules.star), deg_minus_id(w, rules.star), rules.star))
    return "V = " + v.to_string() + ", W = " + w.to_string();
  return "";
}

std::string check_lift(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const auto x = oracle::random_element(rng, r);
  const auto y = oracle::random_element(rng, r);
  if (lift(star(x, y, rules.star), l) != star(lift(x, l), lift(y, l), rules.star))
    return show(x) + " | " + show(y) + " l = " + std::to_string(l);
  if (lift(EulerElement::unit(r), l) != EulerElement::unit(r + l)) return "unit not preserved";
  return "";
}

std::string check_nontriviality_lemma(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  EulerElement a(r + l);
  while (a.is_zero()) {
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < terms; ++t) {
      const auto h = oracle::random_subgroup(rng, r, 3);
      if (!h.is_full())
        a.add_term(extend_by_full_torus(h, l), std::uniform_int_distribution<int>(-3, 3)(rng));
    }
  }
  EulerElement b(r + l);
  const int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int t = 0; t < terms; ++t) {
    IntVector mn(r + l, Integer(0));
    bool n_nonzero = false;
    while (!n_nonzero) {
      for (auto& x : mn) x = std::uniform_int_distribution<int>(-3, 3)(rng);
      for (std::size_t i = r; i < r + l; ++i) n_nonzero = n_nonzero || mn[i] != 0;
      // Later terms may have n = 0.
      if (t > 0) {
        bool m_nonzero = false;
        for (std::size_t i = 0; i < r + l; ++i) m_nonzero = m_nonzero || mn[i] != 0;
        n_nonzero = m_nonzero;
      }
    }
    b.add_term(subgroup_canonical(r + l, {mn}), sign * std::uniform_int_distribution<int>(1, 3)(rng));
  }
  if (star(a, b, rules.star).is_zero()) return "A⋆B = Θ for A = " + show(a) + ", B = " + show(b);
  return "";
}

std::string check_tensor_dimension(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const auto w = oracle::random_rep(rng, r, 3);
  const auto v = oracle::random_rep(rng, l, 3);
  if (tensor(w, v, rules.tensor).dim() != w.dim() * v.dim())
    return "W = " + w.to_string() + ", V = " + v.to_string();
  return "";
}

std::string check_tensor_weights(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  // dim ≤ 8 factors
  TorusRep w = oracle::random_rep(rng, r, 2), v = oracle::random_rep(rng, l, 2);
  const auto t = tensor(w, v, rules.tensor);
  const std::string where = "W = " + w.to_string() + ", V = " + v.to_string();
  if (oracle::complex_weights(t) != oracle::tensor_complex_weights(w, v))
    return "weight multiset: " + where;
  for (int trial = 0; trial < 4; ++trial) {
    RatVector q1(r), q2(l), q(r + l);
    for (auto& x : q1) x = Rational(std::uniform_int_distribution<int>(-50, 50)(rng), 37);
    for (auto& x : q2) x = Rational(std::uniform_int_distribution<int>(-50, 50)(rng), 41);
    for (auto& x : q1) x.canonicalize();
    for (auto& x : q2) x.canonicalize();
    std::copy(q1.begin(), q1.end(), q.begin());
    std::copy(q2.begin(), q2.end(), q.begin() + static_cast<std::ptrdiff_t>(r));
    if (std::abs(character(t, q) - character(w, q1) * character(v, q2)) > 1e-9)
      return "character product: " + where;
  }
  return "";
}

std::string check_sum_laws(Rng& rng, const SuiteRules& rules) {
  const std::size_t r = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const std::size_t l = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 2)(rng));
  const auto a = oracle::random_rep(rng, r), b = oracle::random_rep(rng, r), c = oracle::random_rep(rng, r);
  const auto v = oracle::random_rep(rng, l);
  const std::string where = a.to_string() + " | " + b.to_string() + " | " + c.to_string();
  if (direct_sum(a, b) != direct_sum(b, a)) return "⊕ not commutative: " + where;
  if (direct_sum(direct_sum(a, b), c) != direct_sum(a, direct_sum(b, c))) return "⊕ not associative: " + where;
  if (tensor(direct_sum(a, b), v, rules.tensor) !=
      direct_sum(tensor(a, v, rules.tensor), tensor(b, v, rules.tensor)))
    return "⊗ not distributive: " + where + " ⊗ " + v.to_string();
  return "";
}

// Covered candidate levels of a problem (cutoff admits the analysis).
std::vector<Rational> covered_levels(const ProblemSpec& spec) {
  std::vector<Rational> out;
  const Rational bound = max_abs_alpha(spec);
  for (const auto& c : candidate_levels(spec))
    if (abs(c.lambda0) * bound <= spec.beta_cutoff) out.push_back(c.lambda0);
  return out;
}

std::string describe(const ProblemSpec& spec, const Rational& level) {
  std::ostringstream os;
  os << "level " << level.get_str() << " r=" << spec.r << " l=" << spec.l << " A:{";
  for (const auto& e : spec.matrix_spectrum) os << e.alpha.get_str() << ":" << e.eigenspace.to_string() << ";";
  os << "} L:{";
  for (const auto& e : spec.laplace_spectrum) os << e.beta.get_str() << ":" << e.eigenspace.to_string() << ";";
  os << "} degF+=" << spec.degF_pos.to_string() << " degF-=" << spec.degF_neg.to_string();
  return os.str();
}

std::string check_kernel_consistency(Rng& rng, const SuiteRules&) {
  const ProblemSpec spec = oracle::random_problem(rng);
  for (const auto& q : covered_levels(spec)) {
    std::int64_t zero_mult = 0;
    for (const auto& e : hessian_spectrum(spec, q))
      if (e.eigenvalue == 0 && e.beta != 0) zero_mult += e.multiplicity;
    if (zero_mult != kernel_rep(spec, q).dim()) return describe(spec, q);
  }
  return "";
}

std::string check_two_routes(Rng& rng, const SuiteRules&) {
  const ProblemSpec spec = oracle::random_problem(rng);
  for (const auto& q : covered_levels(spec))
    if (q > 0 && bif_index_difference(spec, q) != bif_index_product(spec, q)) return describe(spec, q);
  return "";
}

std::string check_accumulation(Rng& rng, const SuiteRules&) {
  const ProblemSpec spec = oracle::random_problem(rng);
  const auto levels = covered_levels(spec);
  for (const auto& q : levels) {
    const TorusRep v = kernel_rep(spec, q);
    const TorusRep below = negative_rep(spec, q, Side::kBelow);
    const TorusRep above = negative_rep(spec, q, Side::kAbove);
    if (q > 0 && above != direct_sum(below, v)) return "W+ != W- ⊕ V at " + describe(spec, q);
    if (q < 0 && below != direct_sum(above, v)) return "W- != W+ ⊕ V at " + describe(spec, q);
    if (q == 0 && (above.dim() != 0 || below.dim() != 0)) return "W(0±ε) != 0 at " + describe(spec, q);
    // Piecewise union over candidate levels strictly between 0 and λ0.
    TorusRep union_rep(spec.r + spec.l);
    for (const auto& c : levels)
      if ((q > 0 && c > 0 && c < q) || (q < 0 && c < 0 && c > q))
        union_rep = direct_sum(union_rep, kernel_rep(spec, c));
    const TorusRep& inner = q > 0 ? below : above;
    if (q != 0 && inner != union_rep) return "piecewise union differs at " + describe(spec, q);
  }
  return "";
}

std::string check_verdict_soundness(Rng& rng, const SuiteRules&) {
  const ProblemSpec spec = oracle::random_problem(rng);
  const ValidationReport rep = validate(spec);
  for (const auto& q : covered_levels(spec)) {
    const Verdict v = verdict(spec, q);
    const bool nonzero = !bif_index(spec, q).is_zero();
    if (v.global_bifurcation != nonzero) return "global flag != (BIF ≠ Θ) at " + describe(spec, q);
    if (v.sufficient_case != SufficientCase::kNone && !nonzero)
      return std::string("case ") + sufficient_case_name(v.sufficient_case) + " but BIF = Θ at " +
             describe(spec, q);
    if (v.symmetry_breaking != (rep.n2 && q != 0)) return "symmetry flag at " + describe(spec, q);
  }
  return "";
}

std::string check_highest_weight(Rng& rng, const SuiteRules&) {
  const ProblemSpec spec = oracle::random_symmetric_problem(rng);
  for (const auto& q : covered_levels(spec)) {
    if (q == 0) continue;
    const CertificateResult cert = unboundedness_certificate(spec, q);
    if (!cert.certificate) return "no certificate (" + cert.reason + ") at " + describe(spec, q);
    const auto& c = *cert.certificate;
    if (c.coefficient == 0) return "zero coefficient at " + describe(spec, q);
    Weight flip = c.weight;
    for (std::size_t i = spec.r; i < flip.size(); ++i) flip[i] = -flip[i];
    if (kernel_rep(spec, q).multiplicity(c.weight) == 0) return "weight missing at " + describe(spec, q);
    for (const auto& other : covered_levels(spec)) {
      const bool between = q > 0 ? (other > 0 && other < q) : (other < 0 && other > q);
      if (!between) continue;
      const TorusRep vo = kernel_rep(spec, other);
      if (vo.multiplicity(c.weight) > 0 || vo.multiplicity(flip) > 0)
        return "weight reappears below at " + describe(spec, q);
    }
  }
  return "";
}

struct SuiteEntry {
  const char* name;
  Trial trial;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> suites = {
      {"intlat.snf_verification", check_snf},
      {"intlat.snf_minors_oracle", check_snf_minors},
      {"intlat.canonical_encoding", check_canonical},
      {"intlat.intersection_laws", check_intersection_laws},
      {"intlat.dimension_lemma", check_dimension_lemma},
      {"intlat.codim_generators", check_codim_generators},
      {"intlat.contains_group", check_contains_group},
      {"intlat.intersection_lemma", check_intersection_lemma},
      {"eulerring.ring_axioms", check_ring_axioms},
      {"eulerring.ideal_codim2", check_ideal},
      {"eulerring.truncation", check_truncation},
      {"eulerring.multiplicativity", check_multiplicativity},
      {"eulerring.lift_homomorphism", check_lift},
      {"eulerring.nontriviality_lemma", check_nontriviality_lemma},
      {"torusrep.tensor_dimension", check_tensor_dimension},
      {"torusrep.tensor_weights", check_tensor_weights},
      {"torusrep.sum_laws", check_sum_laws},
      {"bifurcation.kernel_consistency", check_kernel_consistency},
      {"bifurcation.two_routes", check_two_routes},
      {"bifurcation.accumulation", check_accumulation},
      {"bifurcation.verdict_soundness", check_verdict_soundness},
      {"bifurcation.highest_weight", check_highest_weight},
  };
  return suites;
}

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  // FNV-1a over the name keeps suites independent of registry order.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.emplace_back(s.name);
  return out;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::int64_t trials,
                      const SuiteRules& rules) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(),
                         [&](const SuiteEntry& s) { return name == s.name; });
  if (it == suites.end()) throw InputError(ErrorCode::kMalformedInput, "unknown suite " + name);
  SuiteResult out;
  Rng rng(suite_seed(seed, name));
  for (std::int64_t t = 0; t < trials; ++t) {
    std::string bad;
    try {
      bad = it->trial(rng, rules);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    ++out.trials;
    if (!bad.empty()) {
      ++out.failures;
      if (out.first_counterexample.empty()) out.first_counterexample = bad;
    }
  }
  return out;
}

SelfTestReport run_selftest(std::uint64_t seed, std::int64_t trials, const SuiteRules& rules) {
  if (trials < 1) throw InputError(ErrorCode::kPrecondition, "trials must be >= 1");
  std::vector<std::pair<std::string, std::future<SuiteResult>>> jobs;
  for (const auto& name : suite_names())
    jobs.emplace_back(name, std::async(std::launch::async, [=] {
                        return run_suite(name, seed, trials, rules);
                      }));
  SelfTestReport report;
  for (auto& [name, job] : jobs) report.suites[name] = job.get();
  return report;
}

}  // namespace eqbif
