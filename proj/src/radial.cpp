#include "tlap/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "format.hpp"
#include "tlap/errors.hpp"
#include "tlap/operator_core.hpp"
#include "tlap/profile.hpp"

namespace tlap {

namespace {

constexpr double kOrderSlack = 1e-9;
// Smallest s at which F is probed before declaring a finite-range inverse.
constexpr double kLogSMin = -690.0;

void require_radial_inputs(const Nonlinearity& f, double alpha, int k, bool enforce) {
  if (k < 1) throw InputError("operator index k must be >= 1");
  if (!(alpha > 0.0)) throw InputError("initial value alpha must be positive");
  if (enforce) {
    if (alpha > f.delta) {
      throw InputError("alpha=" + detail::format_number(alpha) + " exceeds the window delta=" +
                       detail::format_number(f.delta) + " of " + f.name);
    }
    if (!check_assumptions(f).ok()) {
      throw InputError("nonlinearity " + f.name + " violates f(0)=0, f>0 on (0,delta), f'>=0");
    }
  }
}

// Integral of e^sigma / f(e^sigma) over [a, b] in log variables.
double log_integral(const Nonlinearity& f, double a, double b) {
  if (a == b) return 0.0;
  auto integrand = [&f](double sigma) {
    const double s = std::exp(sigma);
    return s / f.f(s);
  };
  // Short intervals are resolved by one 15-point rule; refining them only
  // chases the roundoff floor of the error estimate. The same floor sits near
  // 1e-14 relative on long intervals, hence 1e-13.
  const unsigned depth = std::abs(b - a) < 1.0 ? 0 : 20;
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, a, b, depth, 1e-13,
                                                                       &err);
}

double invert_F(const Nonlinearity& f, double alpha, int k, double r) {
  const double target = r * r / (2.0 * k);
  if (target == 0.0) return alpha;

  // F is decreasing in s; bracket [lo, hi] in log s with F(lo) >= target > F(hi).
  double hi = std::log(alpha);
  double f_hi = 0.0;
  double lo = kLogSMin;
  const double f_lo = log_integral(f, lo, hi);
  if (f_lo < target) {
    throw DomainError("F stays below " + detail::format_number(f_lo) + " as s -> 0+; r=" +
                      detail::format_number(r) + " is beyond the range of the inverse");
  }
  // Only F(hi) is carried; F(mid) = F(hi) + integral over [mid, hi].
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= 1e-15 * std::abs(hi)) break;
    const double f_mid = f_hi + log_integral(f, mid, hi);
    if (f_mid >= target) {
      lo = mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace

RadialRun integrate_ivp(const Nonlinearity& f, double alpha, int k, double step, double rmax,
                        const IvpOptions& opts) {
  require_radial_inputs(f, alpha, k, opts.enforce_window);
  if (!(step > 0.0)) throw InputError("step must be positive");
  if (!(rmax >= 1.0)) throw InputError("rmax must be at least 1");

  const auto steps = static_cast<std::size_t>(std::ceil(rmax / step - 1e-9));
  const double kk = static_cast<double>(k);
  auto rhs = [&f, kk](double r, double v) { return -(r / kk) * f.f(v); };

  RadialRun run;
  run.nonlinearity = f.name;
  run.alpha = alpha;
  run.k = k;
  run.step = step;
  run.rmax = static_cast<double>(steps) * step;
  run.samples.reserve(steps + 1);
  run.samples.push_back({0.0, alpha, 0.0});

  // Compensated accumulation of the increments keeps rounding below the
  // truncation error down to steps of 1e-4.
  double v = alpha;
  double carry = 0.0;
  for (std::size_t i = 0; i < steps; ++i) {
    const double r = static_cast<double>(i) * step;
    const double k1 = rhs(r, v);
    const double k2 = rhs(r + 0.5 * step, v + 0.5 * step * k1);
    const double k3 = rhs(r + 0.5 * step, v + 0.5 * step * k2);
    const double k4 = rhs(r + step, v + step * k3);
    const double inc = (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4) - carry;
    const double next = v + inc;
    carry = (next - v) - inc;
    const double r_next = static_cast<double>(i + 1) * step;
    if (!std::isfinite(next)) {
      throw IntegrationError("non-finite state at r=" + detail::format_number(r_next), r);
    }
    v = next;
    run.samples.push_back({r_next, v, rhs(r_next, v)});
  }

  RadialDiagnostics& d = run.diagnostics;
  d.monotone_decreasing = true;
  d.positive = true;
  for (std::size_t i = 0; i < run.samples.size(); ++i) {
    const double vi = run.samples[i].v;
    if (!(vi > 0.0 && vi <= alpha)) d.positive = false;
    if (i + 1 < run.samples.size() && !(run.samples[i + 1].v < vi)) d.monotone_decreasing = false;
  }
  d.tail_below = run.samples.back().v;
  d.hessian_order_holds = check_hessian_order(run, f).holds;
  return run;
}

double quadrature_F(const Nonlinearity& f, double alpha, double s) {
  if (!(s > 0.0) || s > alpha) throw InputError("F(s) needs 0 < s <= alpha");
  return log_integral(f, std::log(s), std::log(alpha));
}

double quadrature_inverse(const Nonlinearity& f, double alpha, int k, double r) {
  require_radial_inputs(f, alpha, k, true);
  if (!(r >= 0.0)) throw InputError("radius must be nonnegative");
  return invert_F(f, alpha, k, r);
}

HessianOrderReport check_hessian_order(const RadialRun& run, const Nonlinearity& f) {
  HessianOrderReport rep;
  const double kk = static_cast<double>(run.k);
  bool first = true;
  for (const RadialSample& s : run.samples) {
    if (s.r == 0.0) continue;
    const double vpp = -(f.f(s.v) + s.r * f.fprime(s.v) * s.vp) / kk;
    const double margin = vpp - s.vp / s.r;
    if (first || margin < rep.min_margin) rep.min_margin = margin;
    first = false;
    if (margin < -kOrderSlack) {
      rep.holds = false;
      rep.violations.push_back(s.r);
    }
  }
  return rep;
}

double residual_of_radial(const RadialRun& run, const Nonlinearity& f, std::size_t n) {
  if (run.k < 1 || static_cast<std::size_t>(run.k) > n - 1 || n < 2) {
    throw InputError("radial residual needs 1 <= k <= N-1");
  }
  if (!check_hessian_order(run, f).holds) {
    throw VerificationError("v'' >= v'/r fails on the trajectory; the radial reduction does not apply");
  }
  const double kk = static_cast<double>(run.k);
  const auto k = static_cast<std::size_t>(run.k);
  double worst = 0.0;
  std::vector<double> eig(n);
  for (const RadialSample& s : run.samples) {
    const double vpp = -(f.f(s.v) + s.r * f.fprime(s.v) * s.vp) / kk;
    if (s.r == 0.0) {
      std::fill(eig.begin(), eig.end(), vpp);
    } else {
      eig[0] = vpp;
      std::fill(eig.begin() + 1, eig.end(), s.vp / s.r);
    }
    const double res = pminus_k(SymmetricMatrix::diagonal(eig), k) + f.f(s.v);
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

OracleAgreement compare_with_oracles(const RadialRun& run, const Nonlinearity& f, std::size_t stride,
                                     Exec exec) {
  if (stride == 0) throw InputError("stride must be positive");
  const std::size_t count = (run.samples.size() + stride - 1) / stride;
  std::vector<double> quad_err(count);
  std::vector<double> closed_err(count, 0.0);
  // The quadrature identity only needs f > 0 on (0, alpha], so exploratory runs
  // outside the window are compared too.
  require_radial_inputs(f, run.alpha, run.k, false);
  const bool closed = f.name == "allen-cahn" && run.alpha <= 1.0 / std::sqrt(3.0);
  const std::optional<Profile1D> closed_form =
      closed ? std::optional<Profile1D>(make_radial_closed_form(run.alpha, run.k)) : std::nullopt;

  auto body = [&](std::size_t j) {
    const RadialSample& s = run.samples[j * stride];
    quad_err[j] = std::abs(invert_F(f, run.alpha, run.k, s.r) - s.v);
    if (closed_form) closed_err[j] = std::abs(closed_form->value(s.r) - s.v);
  };
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Exec::serial) {
    for (std::ptrdiff_t j = 0; j < n; ++j) body(static_cast<std::size_t>(j));
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t j = 0; j < n; ++j) body(static_cast<std::size_t>(j));
  }

  OracleAgreement out;
  out.samples_compared = count;
  out.sup_quadrature_error = *std::max_element(quad_err.begin(), quad_err.end());
  if (closed) out.sup_closed_form_error = *std::max_element(closed_err.begin(), closed_err.end());
  return out;
}

}  // namespace tlap
