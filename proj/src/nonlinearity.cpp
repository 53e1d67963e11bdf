#include "tlap/nonlinearity.hpp"

#include <algorithm>
#include <cmath>

#include "format.hpp"
#include "tlap/errors.hpp"

namespace tlap {

namespace {

constexpr int kWindowSamples = 10000;

bool nondecreasing_on_closed_window(const std::function<double(double)>& fprime, double delta) {
  for (int i = 0; i < kWindowSamples; ++i) {
    const double u = -delta + 2.0 * delta * static_cast<double>(i) / (kWindowSamples - 1);
    if (!(fprime(u) >= 0.0)) return false;
  }
  return true;
}

}  // namespace

Nonlinearity make_allen_cahn() {
  return Nonlinearity{
      "allen-cahn",
      [](double u) { return u - u * u * u; },
      [](double u) { return 1.0 - 3.0 * u * u; },
      1.0 / std::sqrt(3.0),
  };
}

Nonlinearity make_power_family(double a, double b, double gamma) {
  if (!(a > 0.0)) throw ConstructionError("power family needs a > 0 for f > 0 near 0+");
  if (!(gamma > 1.0)) throw ConstructionError("power family needs gamma > 1");
  if (!std::isfinite(b)) throw InputError("power family coefficient b must be finite");

  Nonlinearity nl;
  nl.name = "power:" + detail::format_number(a) + "," + detail::format_number(b) + "," + detail::format_number(gamma);
  nl.f = [a, b, gamma](double u) { return a * u + b * std::pow(std::abs(u), gamma - 1.0) * u; };
  nl.fprime = [a, b, gamma](double u) {
    return a + b * gamma * std::pow(std::abs(u), gamma - 1.0);
  };

  if (nondecreasing_on_closed_window(nl.fprime, 1.0)) {
    nl.delta = 1.0;
  } else {
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (nondecreasing_on_closed_window(nl.fprime, mid) ? lo : hi) = mid;
    }
    nl.delta = lo;
  }
  if (!(nl.delta > 0.0)) {
    throw ConstructionError("power family member has no nondecreasing window around 0");
  }
  return nl;
}

Nonlinearity make_zero_reaction() {
  return Nonlinearity{"zero", [](double) { return 0.0; }, [](double) { return 0.0; }, 1.0};
}

Nonlinearity make_linear_reaction(double slope) {
  if (!std::isfinite(slope)) throw InputError("linear reaction slope must be finite");
  return Nonlinearity{"linear:" + detail::format_number(slope), [slope](double u) { return slope * u; },
                      [slope](double) { return slope; }, 1.0};
}

AssumptionCheck check_assumptions(const Nonlinearity& nl, int samples) {
  AssumptionCheck out;
  out.f_zero_at_origin = nl.f(0.0) == 0.0;
  out.positive_on_window = nl.delta > 0.0;
  out.nondecreasing_on_window = nl.delta > 0.0;
  out.derivative_consistent = true;

  constexpr double fd_step = 1e-5;
  for (int i = 1; i < samples; ++i) {
    const double frac = static_cast<double>(i) / samples;
    const double up = nl.delta * frac;
    if (!(nl.f(up) > 0.0)) out.positive_on_window = false;
    const double u = -nl.delta + 2.0 * nl.delta * frac;
    if (!(nl.fprime(u) >= -1e-12)) out.nondecreasing_on_window = false;
    const double centered = (nl.f(u + fd_step) - nl.f(u - fd_step)) / (2.0 * fd_step);
    const double mismatch = std::abs(centered - nl.fprime(u));
    out.max_derivative_mismatch = std::max(out.max_derivative_mismatch, mismatch);
    // f' may have an integrable kink at 0 (gamma < 2); the secant slope then
    // only lies between the neighbouring derivative values.
    const double spread = std::abs(nl.fprime(u + fd_step) - nl.fprime(u - fd_step));
    if (!(mismatch <= std::max(1e-6, spread))) out.derivative_consistent = false;
  }
  return out;
}

double sup_abs_derivative(const Nonlinearity& nl, double lo, double hi, int samples) {
  double sup = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double u = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
    sup = std::max(sup, std::abs(nl.fprime(u)));
  }
  return sup;
}

}  // namespace tlap
