#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eqbif/io.hpp"

using namespace eqbif;

namespace {

std::string fixture(const char* name) { return std::string(EQBIF_FIXTURES) + "/" + name; }

Json circle_doc() {
  std::ifstream in(fixture("circle_quartic.json"));
  return Json::parse(in);
}

ErrorCode parse_code(const Json& doc) {
  try {
    problem_from_json(doc);
  } catch (const InputError& e) {
    return e.code();
  }
  FAIL("expected an input error");
  return ErrorCode::kMalformedInput;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(EQBIF_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("circle fixture parses to the built-in spec") {
  const ProblemSpec spec = parse_problem(fixture("circle_quartic.json"));
  CHECK(spec.r == 1);
  CHECK(spec.l == 1);
  CHECK(spec.p == 2);
  REQUIRE(spec.matrix_spectrum.size() == 1);
  CHECK(spec.matrix_spectrum[0].alpha == 1);
  CHECK(spec.matrix_spectrum[0].eigenspace == TorusRep::irreducible({1}));
  CHECK(spec.degF_pos == EulerElement::unit(1));
  CHECK(problem_to_json(spec) == problem_to_json(circle_quartic_problem(9)));
}

TEST_CASE("sphere fixture parses to the built-in spec") {
  const ProblemSpec spec = parse_problem(fixture("sphere_scalar.json"));
  CHECK(problem_to_json(spec) == problem_to_json(sphere_scalar_problem(3, 4)));
}

TEST_CASE("parse after serialize is the identity") {
  for (const ProblemSpec& spec : {circle_quartic_problem(16), sphere_scalar_problem(5, 3),
                                  sphere_scalar_problem(4, 2)}) {
    const Json doc = problem_to_json(spec);
    const ProblemSpec back = problem_from_json(Json::parse(doc.dump()));
    CHECK(problem_to_json(back) == doc);
    CHECK(back.laplace_spectrum.size() == spec.laplace_spectrum.size());
    CHECK(back.degF_neg == spec.degF_neg);
  }
}

TEST_CASE("error codes") {
  Json dims = circle_doc();
  dims["matrix_spectrum"][0]["trivial_mult"] = 1;
  CHECK(parse_code(dims) == ErrorCode::kDimMismatch);

  Json empty = circle_doc();
  empty["degF_pos"] = Json::array();
  CHECK(parse_code(empty) == ErrorCode::kB6Trivial);

  Json missing = circle_doc();
  missing.erase("beta_cutoff");
  CHECK(parse_code(missing) == ErrorCode::kMalformedInput);

  Json rank = circle_doc();
  rank["matrix_spectrum"][0]["weights"][0]["m"] = Json::array({1, 2});
  CHECK(parse_code(rank) == ErrorCode::kRankMismatch);

  CHECK_THROWS_AS(parse_problem_text("{\"r\": 1,"), InputError);
}

TEST_CASE("errors are located") {
  Json bad = circle_doc();
  bad["matrix_spectrum"][0]["alpha"] = "1/0";
  try {
    problem_from_json(bad);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("$.matrix_spectrum[0].alpha") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic and round-trip") {
  const ProblemSpec spec = circle_quartic_problem(9);
  const std::string a = report_json(spec, analyze_all(spec)).dump(2);
  const std::string b = report_json(spec, analyze_all(spec)).dump(2);
  CHECK(a == b);
  CHECK(Json::parse(a).dump(2) == a);
  const Json doc = Json::parse(a);
  CHECK(doc["levels"].size() == 4);
  CHECK(doc["levels"][1]["lambda0"] == "1");
  CHECK(doc["levels"][1]["verdict"]["global_bifurcation"] == true);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("candidates " + fixture("circle_quartic.json")) == 0);
  CHECK(run_cli("report " + fixture("sphere_scalar.json") + " --format json") == 0);
  CHECK(run_cli("analyze " + fixture("circle_quartic.json") + " --level 4") == 0);
  CHECK(run_cli("analyze " + fixture("circle_quartic.json") + " --level 16") == 3);
  CHECK(run_cli("analyze " + fixture("circle_quartic.json") + " --level 0.5") == 2);
  CHECK(run_cli("candidates /nonexistent.json") == 2);
  CHECK(run_cli("corroborate-circle --k 2 --lambda 4") == 3);
  CHECK(run_cli("corroborate-circle --k 1 --lambda 1.5") == 0);
  CHECK(run_cli("scan --lo 0.5 --hi 5") == 0);
  CHECK(run_cli("scan --lo 0.5 --hi 50 --modes 4") == 3);
  CHECK(run_cli("bogus") == 2);
}
