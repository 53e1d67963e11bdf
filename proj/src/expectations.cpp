#include "tlap/expectations.hpp"

#include <fstream>
#include <sstream>

#include "expected_verdicts_data.hpp"
#include "tlap/errors.hpp"

namespace tlap {

namespace {

Outcome parse_outcome(const Json& j, const char* key) {
  const std::string s = j.at(key).get<std::string>();
  if (s == "pass") return Outcome::pass;
  if (s == "fail") return Outcome::fail;
  throw InputError(std::string("expectation field '") + key + "' must be pass or fail, got '" + s + "'");
}

}  // namespace

bool Expectation::matches(std::string_view candidate_spec, std::string_view nonlinearity_spec) const {
  if (nonlinearity_spec != nonlinearity) return false;
  if (candidate.size() >= 2 && candidate.ends_with(":*")) {
    const std::string_view family(candidate.data(), candidate.size() - 1);  // keeps the ':'
    return candidate_spec.starts_with(family) && candidate_spec.size() > family.size();
  }
  return candidate_spec == candidate;
}

const Expectation* ExpectationTable::find(std::string_view candidate_spec,
                                          std::string_view nonlinearity_spec) const {
  for (const Expectation& e : entries) {
    if (e.matches(candidate_spec, nonlinearity_spec)) return &e;
  }
  return nullptr;
}

ExpectationTable parse_expectations(const Json& j, std::string source) {
  ExpectationTable t;
  t.source = std::move(source);
  try {
    if (j.at("format").get<std::string>() != "tlap-expected-verdicts") {
      throw InputError("not an expected-verdict table: " + t.source);
    }
    t.version = j.at("version").get<int>();
    for (const Json& e : j.at("entries")) {
      Expectation x;
      x.candidate = e.at("candidate").get<std::string>();
      x.nonlinearity = e.at("nonlinearity").get<std::string>();
      x.subsolution = parse_outcome(e, "subsolution");
      x.supersolution = parse_outcome(e, "supersolution");
      x.solution = parse_outcome(e, "solution");
      x.role = e.value("role", "");
      x.note = e.value("note", "");
      t.entries.push_back(std::move(x));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed expected-verdict table " + t.source + ": " + e.what());
  }
  return t;
}

ExpectationTable load_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open expectation table " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Json j;
  try {
    j = Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("expectation table " + path + " is not JSON: " + e.what());
  }
  return parse_expectations(j, path);
}

const ExpectationTable& bundled_expectations() {
  static const ExpectationTable table =
      parse_expectations(Json::parse(detail::kExpectedVerdictsJson), "bundled:expected_verdicts.json");
  return table;
}

bool verdict_matches(const Verdict& v, const Expectation& e) {
  return v.subsolution == e.subsolution && v.supersolution == e.supersolution && v.solution == e.solution;
}

}  // namespace tlap
