#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tlap/candidate.hpp"
#include "tlap/nonlinearity.hpp"
#include "tlap/profile.hpp"

namespace tlap {

// Name that does not resolve in the catalog (a usage error at the CLI).
class CatalogLookupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string pattern;
  std::string kind;
  std::string description;
};

std::vector<CatalogEntry> candidate_catalog();
std::vector<CatalogEntry> nonlinearity_catalog();

// allen-cahn | power:a,b,gamma | zero | linear:s
Nonlinearity parse_nonlinearity(std::string_view spec);

struct ProfileSpec {
  std::string family;  // "halfline-tanh", "tanh-shifted", "radial-closed", ...
  std::vector<double> params;
  CandidateKind kind = CandidateKind::one_dimensional;
  Profile1D profile;
  // Operator index baked into the profile (radial-closed:alpha,k), if any.
  std::optional<std::size_t> profile_k;
};

// halfline-tanh | plain-tanh | tanh-shifted:c | zero | constant:a |
// radial-closed:alpha[,k]. A radial-closed name without k takes `default_k`.
ProfileSpec parse_profile(std::string_view spec, std::size_t default_k = 1);

// Candidate from catalog names; throws CatalogLookupError for unknown names and
// InputError when the profile's baked-in k contradicts `k`.
Candidate make_candidate(std::string_view profile_spec, std::size_t n, std::size_t k,
                         std::string_view nonlinearity_spec = "allen-cahn");

}  // namespace tlap
