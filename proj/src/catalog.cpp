#include "tlap/catalog.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "tlap/errors.hpp"

namespace tlap {

namespace {

struct SplitName {
  std::string_view head;
  std::vector<double> params;
};

double parse_double(std::string_view text, std::string_view whole) {
  double out = 0.0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, out);
  if (res.ec != std::errc() || res.ptr != end) {
    throw CatalogLookupError("cannot parse parameter '" + std::string(text) + "' in '" +
                             std::string(whole) + "'");
  }
  return out;
}

SplitName split(std::string_view spec) {
  SplitName out;
  const std::size_t colon = spec.find(':');
  out.head = spec.substr(0, colon);
  if (colon == std::string_view::npos) return out;
  std::string_view rest = spec.substr(colon + 1);
  while (true) {
    const std::size_t comma = rest.find(',');
    out.params.push_back(parse_double(rest.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

void expect_params(const SplitName& s, std::size_t lo, std::size_t hi, std::string_view spec) {
  if (s.params.size() < lo || s.params.size() > hi) {
    throw CatalogLookupError("wrong number of parameters in '" + std::string(spec) + "'");
  }
}

}  // namespace

std::vector<CatalogEntry> candidate_catalog() {
  return {
      {"halfline-tanh", "one_dimensional", "tanh(t/sqrt2) for t >= 0, zero for t < 0"},
      {"tanh-shifted:c", "one_dimensional", "zero plateau on (-c, c) with tanh branches, c >= 0"},
      {"plain-tanh", "one_dimensional", "tanh(t/sqrt2) on the whole line (negative control)"},
      {"zero", "one_dimensional", "identically zero"},
      {"constant:a", "one_dimensional", "constant profile (negative control for a != 0)"},
      {"radial-closed:alpha[,k]", "radial", "closed-form positive radial solution, 0 < alpha <= 1/sqrt3"},
  };
}

std::vector<CatalogEntry> nonlinearity_catalog() {
  return {
      {"allen-cahn", "nonlinearity", "f(u) = u - u^3, delta = 1/sqrt3"},
      {"power:a,b,gamma", "nonlinearity", "f(u) = a u + b |u|^(gamma-1) u, a > 0, gamma > 1"},
      {"zero", "nonlinearity", "f = 0 (finite-difference experiments only)"},
      {"linear:s", "nonlinearity", "f(u) = s u; s > 0 meets the radial assumptions (analytic ODE oracle)"},
  };
}

Nonlinearity parse_nonlinearity(std::string_view spec) {
  const SplitName s = split(spec);
  if (s.head == "allen-cahn") {
    expect_params(s, 0, 0, spec);
    return make_allen_cahn();
  }
  if (s.head == "power") {
    expect_params(s, 3, 3, spec);
    return make_power_family(s.params[0], s.params[1], s.params[2]);
  }
  if (s.head == "zero") {
    expect_params(s, 0, 0, spec);
    return make_zero_reaction();
  }
  if (s.head == "linear") {
    expect_params(s, 1, 1, spec);
    return make_linear_reaction(s.params[0]);
  }
  throw CatalogLookupError("unknown nonlinearity '" + std::string(spec) + "'");
}

ProfileSpec parse_profile(std::string_view spec, std::size_t default_k) {
  const SplitName s = split(spec);
  const std::string family(s.head);
  auto one_d = [&](Profile1D p) {
    return ProfileSpec{family, s.params, CandidateKind::one_dimensional, std::move(p), std::nullopt};
  };

  if (s.head == "halfline-tanh") {
    expect_params(s, 0, 0, spec);
    return one_d(make_halfline_tanh());
  }
  if (s.head == "plain-tanh") {
    expect_params(s, 0, 0, spec);
    return one_d(make_plain_tanh());
  }
  if (s.head == "tanh-shifted") {
    expect_params(s, 1, 1, spec);
    return one_d(make_tanh_profile(s.params[0]));
  }
  if (s.head == "zero") {
    expect_params(s, 0, 0, spec);
    return one_d(make_zero_profile());
  }
  if (s.head == "constant") {
    expect_params(s, 1, 1, spec);
    return one_d(make_constant_profile(s.params[0]));
  }
  if (s.head == "radial-closed") {
    expect_params(s, 1, 2, spec);
    std::optional<std::size_t> baked;
    std::size_t k = default_k;
    if (s.params.size() == 2) {
      const double kd = s.params[1];
      if (!(kd >= 1.0) || std::floor(kd) != kd) {
        throw InputError("radial-closed needs an integer k >= 1");
      }
      k = static_cast<std::size_t>(kd);
      baked = k;
    }
    return ProfileSpec{family, s.params, CandidateKind::radial,
                       make_radial_closed_form(s.params[0], static_cast<int>(k)), baked};
  }
  throw CatalogLookupError("unknown candidate '" + std::string(spec) + "'");
}

Candidate make_candidate(std::string_view profile_spec, std::size_t n, std::size_t k,
                         std::string_view nonlinearity_spec) {
  ProfileSpec ps = parse_profile(profile_spec, k);
  if (ps.profile_k && *ps.profile_k != k) {
    throw InputError("profile '" + std::string(profile_spec) + "' is built for k=" +
                     std::to_string(*ps.profile_k) + " but k=" + std::to_string(k) +
                     " was requested");
  }
  return Candidate(std::string(profile_spec), ps.kind, std::move(ps.profile), n, k,
                   parse_nonlinearity(nonlinearity_spec));
}

}  // namespace tlap
