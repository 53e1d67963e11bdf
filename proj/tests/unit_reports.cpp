#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "tlap/catalog.hpp"
#include "tlap/errors.hpp"
#include "tlap/expectations.hpp"
#include "tlap/radial.hpp"
#include "tlap/reports.hpp"

using namespace tlap;

TEST_CASE("matrix JSON round trip") {
  const SymmetricMatrix m = SymmetricMatrix::from_rows({{1.5, -2.0, 0.25}, {-2.0, 3.0, 1e-17}, {0.25, 1e-17, -7.0}});
  const Json j = matrix_to_json(m);
  CHECK(j["dim"] == 3);
  CHECK(j["upper"].size() == 6);
  CHECK(j.dump() == R"({"dim":3,"upper":[1.5,-2.0,0.25,3.0,1e-17,-7.0]})");
  CHECK(matrix_from_json(Json::parse(j.dump())) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"dim":2,"upper":[1,2]})")), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"upper":[1]})")), InputError);
}

TEST_CASE("verdict report") {
  const auto grid = default_grid(CandidateKind::one_dimensional);
  const Candidate c = make_candidate("plain-tanh", 2, 1);
  const Verdict v = verify(c, grid, {.max_witnesses = 3});
  const StructureReport s = analyze_profile_structure(c, v, grid);
  const Json j = verdict_to_json(v, &s);
  CHECK(j["candidate"] == "plain-tanh");
  CHECK(j["N"] == 2);
  CHECK(j["subsolution"] == "fail");
  CHECK(j["supersolution"] == "pass");
  CHECK(j["witnesses"].size() == 4);
  CHECK(j["witnesses"][0].contains("rule"));
  CHECK(j["structure"]["plateau"].is_null());
  CHECK(dump(j) == dump(verdict_to_json(verify(c, grid, {.max_witnesses = 3, .exec = Exec::serial}), &s)));
  CHECK(dump(j).back() == '\n');

  std::ostringstream csv;
  write_witnesses_csv(csv, v);
  CHECK(csv.str().rfind("t,residual,check,rule\n", 0) == 0);

  const Candidate h = make_candidate("halfline-tanh", 3, 1);
  const Verdict hv = verify(h, grid);
  const StructureReport hs = analyze_profile_structure(h, hv, grid);
  const Json hj = verdict_to_json(hv, &hs);
  CHECK(hj["structure"]["plateau"]["lo"] == "-inf");
  CHECK(hj["structure"]["plateau"]["hi"] == 0.0);
  CHECK(hj["corners"][0]["type"] == "convex");
}

TEST_CASE("radial CSV") {
  const RadialRun run = integrate_ivp(make_allen_cahn(), 0.5, 1, 0.25, 1.0);
  std::ostringstream os;
  write_radial_csv(os, run);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "r,v,vp");
  std::getline(in, line);
  CHECK(line == "0,0.5,0");
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
  CHECK(radial_diagnostics_to_json(run)["samples"] == 5);
}

TEST_CASE("bundled expectation table") {
  const ExpectationTable& t = bundled_expectations();
  CHECK(t.version == 1);
  REQUIRE(t.find("halfline-tanh", "allen-cahn"));
  CHECK(t.find("plain-tanh", "allen-cahn")->solution == Outcome::fail);
  CHECK(t.find("tanh-shifted:0.5", "allen-cahn"));
  CHECK_FALSE(t.find("tanh-shifted:", "allen-cahn"));
  CHECK_FALSE(t.find("tanh-shifted", "allen-cahn"));
  CHECK_FALSE(t.find("halfline-tanh", "power:1,0,2"));
  CHECK_FALSE(t.find("constant:0.5", "allen-cahn"));
  CHECK_THROWS_AS(parse_expectations(Json::parse(R"({"format":"x","version":1,"entries":[]})"), "t"), InputError);
  CHECK_THROWS_AS(parse_expectations(Json::parse(R"({"format":"tlap-expected-verdicts","version":1,
      "entries":[{"candidate":"zero","nonlinearity":"allen-cahn","subsolution":"maybe",
      "supersolution":"pass","solution":"pass"}]})"), "t"), InputError);
  CHECK_THROWS_AS(load_expectations("/nonexistent/table.json"), InputError);
}
