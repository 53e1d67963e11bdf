#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlap/candidate.hpp"
#include "tlap/execution.hpp"
#include "tlap/profile.hpp"

namespace tlap {

inline constexpr double kDefaultVerifyTol = 1e-8;
// Smooth-scan grid points closer than this to a junction are rejected.
inline constexpr double kCornerExclusion = 1e-7;

enum class Side { smooth, corner_left, corner_right };
const char* to_string(Side side);

enum class Outcome { pass, fail };
const char* to_string(Outcome o);

// Residual P-_k(D^2 u) + f(u) at a scan coordinate t (x_N for 1D, r for radial).
struct ResidualSample {
  double t = 0.0;
  double residual = 0.0;
  Side side = Side::smooth;
};

struct Witness {
  double t = 0.0;
  std::optional<double> residual;
  std::string check;  // "subsolution" or "supersolution"
  std::string rule;
  bool derived_rule = false;
};

struct CornerOutcome {
  Corner corner;
  bool weak = false;
  Outcome subsolution = Outcome::pass;
  Outcome supersolution = Outcome::pass;
  std::string subsolution_rule;
  std::string supersolution_rule;
  double f_value = 0.0;
  // Set when the supersolution failure follows from the flat tangential test but
  // is not one of the worked cases (f(value) > 0 at a convex corner).
  bool derived_rule = false;
  std::vector<ResidualSample> two_sided;  // weak junctions only
};

struct Verdict {
  std::string candidate;
  std::string kind;
  std::size_t n = 0;
  std::size_t k = 0;
  double tol = kDefaultVerifyTol;
  Outcome subsolution = Outcome::pass;
  Outcome supersolution = Outcome::pass;
  Outcome solution = Outcome::pass;
  std::size_t smooth_samples = 0;
  double min_residual = 0.0;
  double max_residual = 0.0;
  std::vector<Witness> witnesses;
  std::vector<CornerOutcome> corners;
};

// Uniform default scan windows: [-20, 20] step 1e-2 (1D), [1e-3, 20] with 2001 points (radial).
std::vector<double> default_grid(CandidateKind kind);
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

// Classical residuals at grid points away from junctions. Throws
// SingularPointError naming the junction if a point lies within 1e-7 of one.
std::vector<ResidualSample> scan_smooth_residuals(const Candidate& c, std::span<const double> grid,
                                                  Exec exec = Exec::parallel);

// Corner rules on (value, s-, s+, f):
//  convex  (s+ > s-): no upper test touches, subsolution holds vacuously; a lower
//                     test has lambda_{N-1} <= 0 (tangential maxima), the flat one
//                     gives P-_k = 0, so supersolution holds iff f(value) <= tol.
//  concave (s+ < s-): supersolution holds vacuously; upper tests with flat
//                     tangential part and arbitrarily negative normal curvature
//                     exist, so subsolution fails.
// Weak junctions (|s+ - s-| <= 1e-9) get two-sided classical residual checks.
CornerOutcome check_corner(const Candidate& c, const Corner& corner, double tol = kDefaultVerifyTol);

struct VerifyOptions {
  double tol = kDefaultVerifyTol;
  std::size_t max_witnesses = 20;
  Exec exec = Exec::parallel;
};

Verdict verify(const Candidate& c, std::span<const double> grid, const VerifyOptions& opts = {});

struct Plateau {
  double lo = 0.0;
  double hi = 0.0;
  bool left_unbounded = false;   // run starts at the left end of the scan window
  bool right_unbounded = false;  // run ends at the right end of the scan window
};

enum class Monotonicity { constant, nondecreasing, nonincreasing, non_monotone };
const char* to_string(Monotonicity m);

enum class FlagStatus { ok, violated, not_applicable };
const char* to_string(FlagStatus s);

struct ConsistencyFlag {
  std::string name;
  FlagStatus status = FlagStatus::not_applicable;
  std::string detail;
};

struct StructureReport {
  double min_value = 0.0;
  double max_value = 0.0;
  std::string sign_pattern;
  Monotonicity monotonicity = Monotonicity::constant;
  std::optional<Plateau> plateau;
  // (a) subsolutions are nonnegative, (b) no positive 1D supersolution,
  // (c) nondecreasing nonnegative 1D supersolutions vanish on a left half-line.
  ConsistencyFlag nonnegative_subsolution;
  ConsistencyFlag no_positive_supersolution;
  ConsistencyFlag monotone_supersolution_plateau;

  bool consistent() const {
    return nonnegative_subsolution.status != FlagStatus::violated &&
           no_positive_supersolution.status != FlagStatus::violated &&
           monotone_supersolution_plateau.status != FlagStatus::violated;
  }
};

inline constexpr double kZeroValueTol = 1e-12;

StructureReport analyze_profile_structure(const Candidate& c, const Verdict& verdict,
                                          std::span<const double> grid);

}  // namespace tlap
