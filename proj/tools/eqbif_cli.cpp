// eqbif: bifurcation indices for torus-symmetric elliptic systems.

#include <CLI11.hpp>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eqbif/bifurcation.hpp"
#include "eqbif/corroborate.hpp"
#include "eqbif/io.hpp"
#include "eqbif/oracle.hpp"

using namespace eqbif;

namespace {

enum Exit { kOk = 0, kInput = 2, kRefusal = 3, kConsistency = 4 };

struct Output {
  std::string format = "text";
  bool json() const { return format == "json"; }

  // JSON goes to stdout; the text summary goes to stdout in text mode and
  // to stderr otherwise.
  void emit(const Json& doc, const std::string& summary) const {
    if (json()) {
      std::cout << doc.dump(2) << "\n";
      std::cerr << summary;
    } else {
      std::cout << summary;
    }
  }
};

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << x;
  return os.str();
}

int run_candidates(const std::string& file, const Output& out) {
  const ProblemSpec spec = parse_problem(file);
  const auto levels = candidate_levels(spec);
  std::ostringstream text;
  text << levels.size() << " candidate level(s):";
  for (const auto& c : levels) text << " " << rational_to_string(c.lambda0);
  text << "\n";
  out.emit(candidates_to_json(levels), text.str());
  return kOk;
}

int run_analyze(const std::string& file, const std::string& level, const Output& out) {
  const ProblemSpec spec = parse_problem(file);
  const Rational q = parse_rational(level);
  LevelOutcome outcome{q, analyze_level(spec, q), ""};
  out.emit(level_to_json(outcome), level_text(outcome));
  return kOk;
}

int run_analyze_all(const std::string& file, const Output& out) {
  const ProblemSpec spec = parse_problem(file);
  const auto outcomes = analyze_all(spec);
  out.emit(report_json(spec, outcomes), report_text(spec, outcomes));
  for (const auto& o : outcomes)
    if (!o.analysis) return kRefusal;
  return kOk;
}

int run_corroborate(std::size_t k, double lambda, std::size_t modes, const Output& out) {
  const BranchResult br = newton_branch(k, lambda, modes);
  const double exact = std::sqrt(lambda - static_cast<double>(k * k));
  const double ansatz = sup_norm(residual(exact_ansatz(modes, k, lambda)));
  Json doc{{"k", k},
           {"lambda", lambda},
           {"modes", modes},
           {"converged", br.converged},
           {"iterations", br.iterations},
           {"residual", br.residual_norm},
           {"amplitude", br.amplitude},
           {"expected_amplitude", exact},
           {"amplitude_error", std::abs(br.amplitude - exact)},
           {"ansatz_residual", ansatz}};
  std::ostringstream text;
  text << "newton k=" << k << " lambda=" << lambda << ": "
       << (br.converged ? "converged" : "DIVERGED") << " in " << br.iterations
       << " iteration(s), residual " << br.residual_norm << "\n";
  text << "amplitude " << fixed(br.amplitude, 10) << " (closed form " << fixed(exact, 10) << ")\n";
  text << "exact-ansatz residual " << ansatz << "\n";
  out.emit(doc, text.str());
  return br.converged ? kOk : kConsistency;
}

int run_scan(double lo, double hi, std::size_t modes, std::size_t steps, const Output& out) {
  const auto crossings = stability_scan(modes, lo, hi, steps);
  Json list = Json::array();
  std::ostringstream text;
  text << crossings.size() << " crossing(s) in [" << lo << ", " << hi << "]:";
  for (double c : crossings) {
    list.push_back(c);
    text << " " << fixed(c, 6);
  }
  text << "\n";
  out.emit(Json{{"lo", lo}, {"hi", hi}, {"modes", modes}, {"crossings", list}}, text.str());
  return kOk;
}

int run_selftest_command(std::uint64_t seed, std::int64_t trials, const Output& out) {
  const SelfTestReport rep = run_selftest(seed, trials);
  std::ostringstream text;
  for (const auto& [name, s] : rep.suites) {
    text << (s.failures == 0 ? "ok   " : "FAIL ") << name << "  " << s.trials << " trials, "
         << s.failures << " failure(s)\n";
    if (s.failures) text << "     first counterexample: " << s.first_counterexample << "\n";
  }
  text << (rep.passed() ? "all suites passed\n" : "selftest FAILED\n");
  out.emit(selftest_to_json(rep), text.str());
  return rep.passed() ? kOk : kConsistency;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant bifurcation indices for torus-symmetric elliptic systems"};
  app.require_subcommand(1);
  Output out;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  std::string file, level;
  auto* cand = app.add_subcommand("candidates", "list candidate levels");
  cand->add_option("file", file)->required();
  add_format(cand);

  auto* analyze = app.add_subcommand("analyze", "analyze one level");
  analyze->add_option("file", file)->required();
  analyze->add_option("--level", level, "rational, e.g. 1/2")->required();
  add_format(analyze);

  auto* all = app.add_subcommand("analyze-all", "analyze every candidate level");
  all->add_option("file", file)->required();
  add_format(all);

  auto* report = app.add_subcommand("report", "full report");
  report->add_option("file", file)->required();
  add_format(report);

  std::size_t k = 1, modes = 8, steps = 200;
  double lambda = 0.0, lo = 0.0, hi = 0.0;
  auto* corr = app.add_subcommand("corroborate-circle", "Newton onto the circle-model branch");
  corr->add_option("--k", k)->required();
  corr->add_option("--lambda", lambda)->required();
  corr->add_option("--modes", modes, "Fourier cutoff N");
  add_format(corr);

  auto* scan = app.add_subcommand("scan", "stability scan of the trivial branch");
  scan->add_option("--lo", lo)->required();
  scan->add_option("--hi", hi)->required();
  scan->add_option("--modes", modes, "Fourier cutoff N");
  scan->add_option("--steps", steps);
  add_format(scan);

  std::uint64_t seed = 1;
  std::int64_t trials = 100;
  auto* self = app.add_subcommand("selftest", "randomized property suites");
  self->add_option("--seed", seed);
  self->add_option("--trials", trials);
  add_format(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*cand) return run_candidates(file, out);
    if (*analyze) return run_analyze(file, level, out);
    if (*all || *report) return run_analyze_all(file, out);
    if (*corr) return run_corroborate(k, lambda, modes, out);
    if (*scan) return run_scan(lo, hi, modes, steps, out);
    if (*self) return run_selftest_command(seed, trials, out);
  } catch (const InputError& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kInput;
  } catch (const RefusalError& e) {
    std::cerr << "refused [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kRefusal;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency defect [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kConsistency;
  }
  return kOk;
}
