#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace tlap {

using ScalarMap = std::function<double(double)>;

// Threshold on |s+ - s-| separating true corners from smooth (weak) junctions.
inline constexpr double kCornerThreshold = 1e-9;

struct Corner {
  double t0 = 0.0;
  double value = 0.0;
  double slope_left = 0.0;
  double slope_right = 0.0;

  double jump() const { return slope_right - slope_left; }
  bool is_true_corner() const;
  bool is_convex() const { return slope_right > slope_left; }
};

// Twice differentiable map on the open interval (lo, hi).
struct Piece {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  ScalarMap value;
  ScalarMap d1;
  ScalarMap d2;
};

// Piecewise C^2 scalar profile on the real line. Consecutive pieces meet at the
// junction points listed in `corners` (one per interior break, true corner or not).
class Profile1D {
 public:
  Profile1D(std::string name, std::vector<Piece> pieces, std::vector<Corner> corners);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  const std::vector<Corner>& corners() const noexcept { return corners_; }

  double value(double t) const;
  // Derivatives are one-sided limits from the left at a junction only when
  // `from_left` is set; away from junctions the flag is irrelevant.
  double d1(double t, bool from_left = false) const;
  double d2(double t, bool from_left = false) const;

  // Junction within `eps` of t, if any.
  std::optional<Corner> junction_near(double t, double eps) const;
  bool has_true_corners() const;

 private:
  const Piece& piece_at(double t, bool from_left) const;

  std::string name_;
  std::vector<Piece> pieces_;
  std::vector<Corner> corners_;
};

// Three-piece profile: -tanh((t+c)/sqrt2) for t <= -c, 0 on (-c, c),
// tanh((t-c)/sqrt2) for t >= c. For c = 0 this is tanh(|t|/sqrt2) with a single
// convex corner at 0.
Profile1D make_tanh_profile(double c);
// tanh(t/sqrt2) for t >= 0, zero otherwise.
Profile1D make_halfline_tanh();
// tanh(t/sqrt2) on the whole line; smooth.
Profile1D make_plain_tanh();
Profile1D make_constant_profile(double value);
Profile1D make_zero_profile();

// u(r) = 1/sqrt(1 + exp(r^2/k + log((1-alpha^2)/alpha^2))), 0 < alpha <= 1/sqrt3.
// Evaluated in log space so it stays finite for every r.
Profile1D make_radial_closed_form(double alpha, int k);

}  // namespace tlap
