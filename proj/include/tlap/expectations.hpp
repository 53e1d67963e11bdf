#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlap/reports.hpp"
#include "tlap/viscosity.hpp"

namespace tlap {

// Expected verdict for a catalog candidate. `candidate` is an exact spec or a
// family prefix ending in ":*".
struct Expectation {
  std::string candidate;
  std::string nonlinearity;
  Outcome subsolution = Outcome::pass;
  Outcome supersolution = Outcome::pass;
  Outcome solution = Outcome::pass;
  std::string role;
  std::string note;

  bool matches(std::string_view candidate_spec, std::string_view nonlinearity_spec) const;
};

struct ExpectationTable {
  int version = 0;
  std::string source;
  std::vector<Expectation> entries;

  // First matching entry, if any.
  const Expectation* find(std::string_view candidate_spec, std::string_view nonlinearity_spec) const;
};

// Throws InputError on a malformed table.
ExpectationTable parse_expectations(const Json& j, std::string source);
ExpectationTable load_expectations(const std::string& path);
// The table shipped in data/expected_verdicts.json, compiled in.
const ExpectationTable& bundled_expectations();

bool verdict_matches(const Verdict& v, const Expectation& e);

}  // namespace tlap
