#pragma once
// JSON problem files and analysis reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "eqbif/bifurcation.hpp"
#include "eqbif/oracle.hpp"
#include "eqbif/spectra.hpp"

namespace eqbif {

using Json = nlohmann::ordered_json;

/// Builds and validates a spec; errors name the offending JSON path.
ProblemSpec problem_from_json(const Json& doc);
ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec parse_problem(const std::string& path);

/// Explicit form (laplace as a list), accepted back by problem_from_json.
Json problem_to_json(const ProblemSpec& spec);

Json rep_to_json(const TorusRep& v);
Json element_to_json(const EulerElement& x);
Json validation_to_json(const ValidationReport& rep);
Json verdict_to_json(const Verdict& v);
Json level_to_json(const LevelOutcome& outcome);
Json candidates_to_json(const std::vector<CandidateLevel>& levels);
Json report_json(const ProblemSpec& spec, const std::vector<LevelOutcome>& outcomes);
Json selftest_to_json(const SelfTestReport& report);

std::string report_text(const ProblemSpec& spec, const std::vector<LevelOutcome>& outcomes);
std::string level_text(const LevelOutcome& outcome);

}  // namespace eqbif
