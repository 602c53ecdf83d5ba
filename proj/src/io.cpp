#include "eqbif/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace eqbif {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(ErrorCode::kMalformedInput, path + ": " + what);
}

const Json& need(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::int64_t as_count(const Json& j, const std::string& path) {
  const std::int64_t v = as_int(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return v;
}

Rational as_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected \"num/den\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Integer as_integer(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) == 0) return out;
  }
  fail(path, "expected an integer");
}

Weight as_weight(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  Weight w;
  for (std::size_t i = 0; i < j.size(); ++i)
    w.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return w;
}

std::optional<Weight> as_optional_weight(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return as_weight(*it, path + "." + key);
}

TorusRep as_rep(const Json& obj, std::size_t rank, const std::string& path) {
  std::int64_t trivial = 0;
  if (auto it = obj.find("trivial_mult"); it != obj.end())
    trivial = as_count(*it, path + ".trivial_mult");
  TorusRep v(rank, trivial);
  const Json& weights = need(obj, "weights", path);
  if (!weights.is_array()) fail(path + ".weights", "expected an array");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const std::string wp = path + ".weights[" + std::to_string(i) + "]";
    Weight m = as_weight(need(weights[i], "m", wp), wp + ".m");
    if (m.size() != rank) {
      throw InputError(ErrorCode::kRankMismatch, wp + ".m: weight has length " +
                                                     std::to_string(m.size()) + ", torus rank is " +
                                                     std::to_string(rank));
    }
    v.add(std::move(m), as_count(need(weights[i], "mult", wp), wp + ".mult"));
  }
  return v;
}

EulerElement as_element(const Json& j, std::size_t r, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of {characters, coeff}");
  EulerElement x(r);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = path + "[" + std::to_string(i) + "]";
    const Json& chars = need(j[i], "characters", tp);
    if (!chars.is_array()) fail(tp + ".characters", "expected an array");
    std::vector<IntVector> ks;
    for (std::size_t c = 0; c < chars.size(); ++c) {
      const std::string cp = tp + ".characters[" + std::to_string(c) + "]";
      const Weight k = as_weight(chars[c], cp);
      if (k.size() != r) throw InputError(ErrorCode::kRankMismatch, cp + ": expected length " + std::to_string(r));
      ks.push_back(to_int_vector(k));
    }
    x.add_term(subgroup_canonical(r, ks), as_integer(need(j[i], "coeff", tp), tp + ".coeff"));
  }
  return x;
}

std::int64_t sphere_cutoff_k(std::int64_t n, const Rational& cutoff) {
  std::int64_t k = 0;
  while (Rational((k + 1) * (k + 1 + n - 2)) <= cutoff) ++k;
  return k;
}

std::vector<LaplaceEigenData> as_laplace(const Json& j, std::size_t l, const Rational& cutoff,
                                         const std::string& path) {
  if (j.is_object()) {
    const Json& provider = need(j, "provider", path);
    if (!provider.is_string()) fail(path + ".provider", "expected a string");
    const Json& params = need(j, "params", path);
    const std::string name = provider.get<std::string>();
    if (cutoff < 0) fail(path, "beta_cutoff must be nonnegative");
    if (name == "flat_torus") {
      const std::int64_t d = as_count(need(params, "d", path + ".params"), path + ".params.d");
      if (d < 1) fail(path + ".params.d", "expected d >= 1");
      const Integer fl = cutoff.get_num() / cutoff.get_den();
      return flat_torus_spectrum(static_cast<std::size_t>(d), fl.get_si());
    }
    if (name == "sphere") {
      const std::int64_t n = as_count(need(params, "n", path + ".params"), path + ".params.n");
      if (n < 2) fail(path + ".params.n", "expected n >= 2");
      return sphere_spectrum(static_cast<std::size_t>(n), sphere_cutoff_k(n, cutoff));
    }
    fail(path + ".provider", "unknown provider \"" + name + "\"");
  }
  if (!j.is_array()) fail(path, "expected a provider object or an eigenvalue list");
  std::vector<LaplaceEigenData> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ep = path + "[" + std::to_string(i) + "]";
    LaplaceEigenData e{as_rational(need(j[i], "beta", ep), ep + ".beta"), as_rep(j[i], l, ep), false,
                       as_optional_weight(j[i], "highest_weight", ep)};
    if (auto it = j[i].find("irreducible"); it != j[i].end()) {
      if (!it->is_boolean()) fail(ep + ".irreducible", "expected a boolean");
      e.irreducible_nontrivial = it->get<bool>();
    }
    out.push_back(std::move(e));
  }
  return out;
}

Json weight_json(const Weight& w) { return Json(w); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

}  // namespace

ProblemSpec problem_from_json(const Json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  ProblemSpec spec;
  const std::int64_t r = as_int(need(doc, "r", "$"), "$.r");
  const std::int64_t l = as_int(need(doc, "l", "$"), "$.l");
  if (r < 1) fail("$.r", "expected r >= 1");
  if (l < 1) fail("$.l", "expected l >= 1");
  spec.r = static_cast<std::size_t>(r);
  spec.l = static_cast<std::size_t>(l);
  spec.p = as_count(need(doc, "p", "$"), "$.p");

  const Json& ms = need(doc, "matrix_spectrum", "$");
  if (!ms.is_array()) fail("$.matrix_spectrum", "expected an array");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string ep = "$.matrix_spectrum[" + std::to_string(i) + "]";
    spec.matrix_spectrum.push_back({as_rational(need(ms[i], "alpha", ep), ep + ".alpha"),
                                    as_rep(ms[i], spec.r, ep), as_optional_weight(ms[i], "marker", ep)});
  }
  spec.beta_cutoff = as_rational(need(doc, "beta_cutoff", "$"), "$.beta_cutoff");
  spec.laplace_spectrum = as_laplace(need(doc, "laplace", "$"), spec.l, spec.beta_cutoff, "$.laplace");
  spec.degF_pos = as_element(need(doc, "degF_pos", "$"), spec.r, "$.degF_pos");
  spec.degF_neg = as_element(need(doc, "degF_neg", "$"), spec.r, "$.degF_neg");
  require_valid(spec);
  return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(ErrorCode::kMalformedInput, std::string("malformed JSON: ") + e.what());
  }
  return problem_from_json(doc);
}

ProblemSpec parse_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(ErrorCode::kMalformedInput, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_problem_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(e.code(), path + ": " + e.what());
  }
}

Json rep_to_json(const TorusRep& v) {
  Json weights = Json::array();
  for (const auto& [m, k] : v.weights()) weights.push_back({{"m", weight_json(m)}, {"mult", k}});
  return {{"trivial_mult", v.trivial_mult()}, {"weights", weights}, {"dim", v.dim()}};
}

Json element_to_json(const EulerElement& x) {
  Json terms = Json::array();
  for (const auto& [h, c] : x.terms()) {
    Json chars = Json::array();
    for (const auto& k : h.characters()) {
      Json row = Json::array();
      for (const auto& e : k) row.push_back(integer_json(e));
      chars.push_back(row);
    }
    terms.push_back({{"characters", chars}, {"coeff", integer_json(c)}});
  }
  return terms;
}

Json problem_to_json(const ProblemSpec& spec) {
  auto rep_fields = [](Json& obj, const TorusRep& v) {
    Json j = rep_to_json(v);
    obj["weights"] = j["weights"];
    obj["trivial_mult"] = j["trivial_mult"];
  };
  Json ms = Json::array();
  for (const auto& e : spec.matrix_spectrum) {
    Json obj{{"alpha", rational_to_string(e.alpha)}};
    rep_fields(obj, e.eigenspace);
    obj["marker"] = e.marker ? weight_json(*e.marker) : Json(nullptr);
    ms.push_back(obj);
  }
  Json lap = Json::array();
  for (const auto& e : spec.laplace_spectrum) {
    Json obj{{"beta", rational_to_string(e.beta)}};
    rep_fields(obj, e.eigenspace);
    obj["irreducible"] = e.irreducible_nontrivial;
    obj["highest_weight"] = e.highest_weight ? weight_json(*e.highest_weight) : Json(nullptr);
    lap.push_back(obj);
  }
  return {{"r", spec.r},
          {"l", spec.l},
          {"p", spec.p},
          {"matrix_spectrum", ms},
          {"laplace", lap},
          {"beta_cutoff", rational_to_string(spec.beta_cutoff)},
          {"degF_pos", element_to_json(spec.degF_pos)},
          {"degF_neg", element_to_json(spec.degF_neg)}};
}

Json validation_to_json(const ValidationReport& rep) {
  Json errors = Json::array();
  for (const auto& e : rep.structural_errors)
    errors.push_back({{"code", error_code_name(e.code)}, {"message", e.message}});
  Json witnesses = Json::array();
  for (const auto& w : rep.e_witnesses) witnesses.push_back(weight_json(w));
  return {{"n1", rep.n1},
          {"n2", rep.n2},
          {"n2_method", n2_method_name(rep.n2_method)},
          {"e_holds", rep.e_holds},
          {"e_witnesses", witnesses},
          {"e_reason", rep.e_reason},
          {"highest_weights_ok", rep.highest_weights_ok},
          {"highest_weights_reason", rep.highest_weights_reason},
          {"structural_errors", errors}};
}

namespace {

Json certificate_json(const UnboundednessCertificate& c) {
  Json out;
  if (c.kind == UnboundednessCertificate::Kind::kZeroLevel) {
    out["kind"] = "zero-level";
    out["lambda0"] = rational_to_string(c.lambda0);
    out["p"] = c.p;
    return out;
  }
  Json excluded = Json::array();
  for (const auto& q : c.excluded_levels) excluded.push_back(rational_to_string(q));
  Json h = Json::array();
  if (c.h_star)
    for (const auto& k : c.h_star->characters()) {
      Json row = Json::array();
      for (const auto& e : k) row.push_back(integer_json(e));
      h.push_back(row);
    }
  out["kind"] = "highest-weight";
  out["lambda0"] = rational_to_string(c.lambda0);
  out["weight"] = weight_json(c.weight);
  out["h_star"] = h;
  out["coefficient"] = integer_json(c.coefficient);
  out["expected"] = integer_json(c.expected);
  out["multiplicity"] = c.multiplicity;
  out["excluded_levels"] = excluded;
  return out;
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json out{{"global_bifurcation", v.global_bifurcation},
           {"nontrivial_torus_hypothesis", v.nontrivial_torus_hypothesis},
           {"odd_dimension_hypothesis", v.odd_dimension_hypothesis},
           {"sufficient_case", sufficient_case_name(v.sufficient_case)},
           {"sufficient_theorem_applies", v.sufficient_theorem_applies},
           {"symmetry_breaking", v.symmetry_breaking},
           {"alternative", v.alternative ? Json(*v.alternative) : Json(nullptr)},
           {"zero_level_p_odd", v.zero_level_p_odd ? Json(*v.zero_level_p_odd) : Json(nullptr)},
           {"inconclusive", v.inconclusive}};
  out["unbounded"] = v.unbounded ? certificate_json(*v.unbounded) : Json(nullptr);
  out["unbounded_reason"] = v.unbounded_reason;
  return out;
}

Json level_to_json(const LevelOutcome& outcome) {
  Json out{{"lambda0", rational_to_string(outcome.lambda0)}};
  if (!outcome.analysis) {
    out["status"] = "refused";
    out["refusal"] = outcome.refusal;
    return out;
  }
  const LevelAnalysis& a = *outcome.analysis;
  out["status"] = "analyzed";
  out["V"] = rep_to_json(a.v_rep);
  out["W_below"] = rep_to_json(a.w_below);
  out["W_above"] = rep_to_json(a.w_above);
  out["bif_index"] = element_to_json(a.bif_index);
  out["bif_index_text"] = a.bif_index.to_string();
  out["verdict"] = verdict_to_json(a.verdict);
  return out;
}

Json candidates_to_json(const std::vector<CandidateLevel>& levels) {
  Json out = Json::array();
  for (const auto& c : levels) {
    Json wit = Json::array();
    for (const auto& w : c.witnesses)
      wit.push_back({{"matrix_index", w.matrix_index},
                     {"laplace_index", w.laplace_index},
                     {"alpha", rational_to_string(w.alpha)},
                     {"beta", rational_to_string(w.beta)}});
    out.push_back({{"lambda0", rational_to_string(c.lambda0)}, {"witnesses", wit}});
  }
  return out;
}

Json report_json(const ProblemSpec& spec, const std::vector<LevelOutcome>& outcomes) {
  Json levels = Json::array();
  for (const auto& o : outcomes) levels.push_back(level_to_json(o));
  return {{"problem", {{"r", spec.r}, {"l", spec.l}, {"p", spec.p},
                       {"beta_cutoff", rational_to_string(spec.beta_cutoff)}}},
          {"validation", validation_to_json(validate(spec))},
          {"levels", levels}};
}

Json selftest_to_json(const SelfTestReport& report) {
  Json suites = Json::object();
  for (const auto& [name, s] : report.suites)
    suites[name] = {{"trials", s.trials},
                    {"failures", s.failures},
                    {"first_counterexample", s.first_counterexample}};
  return {{"passed", report.passed()}, {"total_failures", report.total_failures()}, {"suites", suites}};
}

std::string level_text(const LevelOutcome& outcome) {
  std::ostringstream os;
  os << "lambda0 = " << rational_to_string(outcome.lambda0) << "\n";
  if (!outcome.analysis) {
    os << "  refused: " << outcome.refusal << "\n";
    return os.str();
  }
  const LevelAnalysis& a = *outcome.analysis;
  const Verdict& v = a.verdict;
  os << "  V       = " << a.v_rep.to_string() << "  (dim " << a.v_rep.dim() << ")\n";
  os << "  W-      = " << a.w_below.to_string() << "\n";
  os << "  W+      = " << a.w_above.to_string() << "\n";
  os << "  BIF     = " << a.bif_index.to_string() << "\n";
  os << "  global bifurcation: " << (v.global_bifurcation ? "yes" : "inconclusive");
  if (v.sufficient_case != SufficientCase::kNone)
    os << " [" << sufficient_case_name(v.sufficient_case) << "]";
  os << "\n";
  os << "  symmetry breaking:  " << (v.symmetry_breaking ? "yes" : "no") << "\n";
  if (v.alternative) os << "  alternative:        " << *v.alternative << "\n";
  if (v.zero_level_p_odd) os << "  p odd:              " << (*v.zero_level_p_odd ? "yes" : "no") << "\n";
  if (v.unbounded) {
    os << "  unbounded:          yes";
    if (v.unbounded->h_star) os << " (H* = " << v.unbounded->h_star->to_string() << ")";
    os << "\n";
  } else {
    os << "  unbounded:          not certified (" << v.unbounded_reason << ")\n";
  }
  return os.str();
}

std::string report_text(const ProblemSpec& spec, const std::vector<LevelOutcome>& outcomes) {
  const ValidationReport rep = validate(spec);
  std::ostringstream os;
  os << "problem: r=" << spec.r << " l=" << spec.l << " p=" << spec.p
     << " beta_cutoff=" << rational_to_string(spec.beta_cutoff) << "\n";
  os << "N1=" << (rep.n1 ? "yes" : "no") << " N2=" << (rep.n2 ? "yes" : "no")
     << " E=" << (rep.e_holds ? "yes" : "no") << "\n";
  for (const auto& o : outcomes) os << level_text(o);
  return os.str();
}

}  // namespace eqbif
