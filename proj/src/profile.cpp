#include "tlap/profile.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "format.hpp"
#include "tlap/errors.hpp"

namespace tlap {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Piece tanh_piece(double lo, double hi, double shift, double sign) {
  // sign * tanh((t - shift) / sqrt2)
  Piece p;
  p.lo = lo;
  p.hi = hi;
  p.value = [shift, sign](double t) { return sign * std::tanh((t - shift) * kInvSqrt2); };
  p.d1 = [shift, sign](double t) {
    const double th = std::tanh((t - shift) * kInvSqrt2);
    return sign * (1.0 - th * th) * kInvSqrt2;
  };
  p.d2 = [shift, sign](double t) {
    const double th = std::tanh((t - shift) * kInvSqrt2);
    return sign * (th * th * th - th);
  };
  return p;
}

Piece constant_piece(double lo, double hi, double value) {
  Piece p;
  p.lo = lo;
  p.hi = hi;
  p.value = [value](double) { return value; };
  p.d1 = [](double) { return 0.0; };
  p.d2 = [](double) { return 0.0; };
  return p;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

bool Corner::is_true_corner() const { return std::abs(jump()) > kCornerThreshold; }

Profile1D::Profile1D(std::string name, std::vector<Piece> pieces, std::vector<Corner> corners)
    : name_(std::move(name)), pieces_(std::move(pieces)), corners_(std::move(corners)) {
  if (pieces_.empty()) throw InputError("profile needs at least one piece");
  if (corners_.size() + 1 != pieces_.size()) {
    throw InputError("profile needs exactly one junction between consecutive pieces");
  }
  if (pieces_.front().lo != -kInf || pieces_.back().hi != kInf) {
    throw InputError("profile pieces must tile the whole line");
  }
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    const Corner& c = corners_[i];
    const Piece& left = pieces_[i];
    const Piece& right = pieces_[i + 1];
    if (left.hi != c.t0 || right.lo != c.t0) {
      throw InputError("profile junction at " + std::to_string(c.t0) + " does not match pieces");
    }
    if (std::abs(left.value(c.t0) - c.value) > 1e-12 ||
        std::abs(right.value(c.t0) - c.value) > 1e-12) {
      throw InputError("profile is discontinuous at " + std::to_string(c.t0));
    }
    if (std::abs(left.d1(c.t0) - c.slope_left) > 1e-8 ||
        std::abs(right.d1(c.t0) - c.slope_right) > 1e-8) {
      throw InputError("declared one-sided slopes disagree with pieces at " +
                       std::to_string(c.t0));
    }
  }
}

const Piece& Profile1D::piece_at(double t, bool from_left) const {
  for (std::size_t i = 0; i < corners_.size(); ++i) {
    const double t0 = corners_[i].t0;
    if (t < t0 || (t == t0 && from_left)) return pieces_[i];
  }
  return pieces_.back();
}

double Profile1D::value(double t) const {
  for (const Corner& c : corners_) {
    if (t == c.t0) return c.value;
  }
  return piece_at(t, false).value(t);
}

double Profile1D::d1(double t, bool from_left) const { return piece_at(t, from_left).d1(t); }

double Profile1D::d2(double t, bool from_left) const { return piece_at(t, from_left).d2(t); }

std::optional<Corner> Profile1D::junction_near(double t, double eps) const {
  for (const Corner& c : corners_) {
    if (std::abs(t - c.t0) < eps) return c;
  }
  return std::nullopt;
}

bool Profile1D::has_true_corners() const {
  for (const Corner& c : corners_) {
    if (c.is_true_corner()) return true;
  }
  return false;
}

Profile1D make_tanh_profile(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InputError("tanh-shifted needs c >= 0");
  std::string name = "tanh-shifted:" + detail::format_number(c);
  if (c == 0.0) {
    return Profile1D(std::move(name), {tanh_piece(-kInf, 0.0, 0.0, -1.0), tanh_piece(0.0, kInf, 0.0, 1.0)},
                     {Corner{0.0, 0.0, -kInvSqrt2, kInvSqrt2}});
  }
  return Profile1D(std::move(name),
                   {tanh_piece(-kInf, -c, -c, -1.0), constant_piece(-c, c, 0.0),
                    tanh_piece(c, kInf, c, 1.0)},
                   {Corner{-c, 0.0, -kInvSqrt2, 0.0}, Corner{c, 0.0, 0.0, kInvSqrt2}});
}

Profile1D make_halfline_tanh() {
  return Profile1D("halfline-tanh", {constant_piece(-kInf, 0.0, 0.0), tanh_piece(0.0, kInf, 0.0, 1.0)},
                   {Corner{0.0, 0.0, 0.0, kInvSqrt2}});
}

Profile1D make_plain_tanh() {
  return Profile1D("plain-tanh", {tanh_piece(-kInf, kInf, 0.0, 1.0)}, {});
}

Profile1D make_constant_profile(double value) {
  if (!std::isfinite(value)) throw InputError("constant profile value must be finite");
  return Profile1D("constant:" + detail::format_number(value), {constant_piece(-kInf, kInf, value)}, {});
}

Profile1D make_zero_profile() {
  return Profile1D("zero", {constant_piece(-kInf, kInf, 0.0)}, {});
}

Profile1D make_radial_closed_form(double alpha, int k) {
  if (!(alpha > 0.0) || !(alpha <= 1.0 / std::sqrt(3.0))) {
    throw InputError("radial closed form needs 0 < alpha <= 1/sqrt(3)");
  }
  if (k < 1) throw InputError("radial closed form needs k >= 1");

  const double log_a = std::log((1.0 - alpha * alpha) / (alpha * alpha));
  const double kk = static_cast<double>(k);

  // With g = exp(L), L = log_a + r^2/k: p = g/(1+g), q = 1/(1+g), v = sqrt(q).
  struct Logistic {
    double p, q;
  };
  auto logistic = [log_a, kk](double r) {
    const double L = log_a + r * r / kk;
    if (L > 0.0) {
      const double e = std::exp(-L);
      return Logistic{1.0 / (1.0 + e), e / (1.0 + e)};
    }
    const double e = std::exp(L);
    return Logistic{e / (1.0 + e), 1.0 / (1.0 + e)};
  };

  Piece p;
  p.value = [logistic](double r) { return std::sqrt(logistic(r).q); };
  // v' = -(r/k) g (1+g)^{-3/2} = -(r/k) p sqrt(q)
  p.d1 = [logistic, kk](double r) {
    const Logistic l = logistic(r);
    return -(r / kk) * l.p * std::sqrt(l.q);
  };
  // v'' = -(1/k) p sqrt(q) - (2 r^2 / k^2) (p q^{3/2} - p^2 sqrt(q) / 2)
  p.d2 = [logistic, kk](double r) {
    const Logistic l = logistic(r);
    const double sq = std::sqrt(l.q);
    return -(l.p * sq) / kk - (2.0 * r * r / (kk * kk)) * (l.p * l.q * sq - 0.5 * l.p * l.p * sq);
  };

  return Profile1D("radial-closed:" + detail::format_number(alpha) + "," + std::to_string(k), {p}, {});
}

}  // namespace tlap
