#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlap/execution.hpp"
#include "tlap/nonlinearity.hpp"

namespace tlap {

struct RadialSample {
  double r = 0.0;
  double v = 0.0;
  double vp = 0.0;
};

struct RadialDiagnostics {
  bool monotone_decreasing = false;  // strictly, for r > 0
  bool positive = false;             // 0 < v <= alpha
  bool hessian_order_holds = false;            // v'' >= v'/r - 1e-9 at every r > 0
  double tail_below = 0.0;           // v(rmax)
};

// Trajectory of v' + (r/k) f(v) = 0, v(0) = alpha on [0, rmax] with a uniform step.
struct RadialRun {
  std::string nonlinearity;
  double alpha = 0.0;
  int k = 1;
  double step = 0.0;
  double rmax = 0.0;
  std::vector<RadialSample> samples;
  RadialDiagnostics diagnostics;
};

struct IvpOptions {
  // When false, alpha may exceed delta and f need not satisfy the structural
  // assumptions; used for exploratory runs outside the validity window.
  bool enforce_window = true;
};

inline constexpr double kDefaultRadialStep = 1e-3;

// Classical fixed-step RK4. Requires 0 < alpha <= delta, step > 0, rmax >= 1.
// Throws IntegrationError (with the last finite radius) on a non-finite state.
RadialRun integrate_ivp(const Nonlinearity& f, double alpha, int k, double step, double rmax,
                        const IvpOptions& opts = {});

// v(r) = F^{-1}(r^2 / 2k) with F(s) = int_s^alpha dt / f(t). F is evaluated by
// adaptive Gauss-Kronrod quadrature in the variable log t and inverted by
// bisection in log v. Throws DomainError when F stays bounded as s -> 0+ and
// r^2/2k exceeds its range.
double quadrature_inverse(const Nonlinearity& f, double alpha, int k, double r);

// F(s) for 0 < s <= alpha.
double quadrature_F(const Nonlinearity& f, double alpha, double s);

struct HessianOrderReport {
  bool holds = true;
  std::vector<double> violations;  // radii where v'' < v'/r - 1e-9
  double min_margin = 0.0;         // min over r > 0 of v'' - v'/r
};

// v'' from the ODE identity v'' = -(1/k)(f(v) + r f'(v) v').
HessianOrderReport check_hessian_order(const RadialRun& run, const Nonlinearity& f);

// Max |P-_k(D^2 u) + f(u)| over the samples, u(x) = v(|x|) in R^N, with the
// Hessian eigenvalues {v'', v'/r (N-1 times)}. Requires k <= N-1 and v'' >= v'/r.
double residual_of_radial(const RadialRun& run, const Nonlinearity& f, std::size_t n);

struct OracleAgreement {
  double sup_quadrature_error = 0.0;
  std::optional<double> sup_closed_form_error;  // allen-cahn with alpha <= 1/sqrt3 only
  std::size_t samples_compared = 0;
};

// Sup-distance of the trajectory to the quadrature inverse at every `stride`-th
// sample, and to the closed form when available.
OracleAgreement compare_with_oracles(const RadialRun& run, const Nonlinearity& f,
                                     std::size_t stride = 1, Exec exec = Exec::parallel);

}  // namespace tlap
