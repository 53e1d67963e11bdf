#pragma once

#include <functional>
#include <string>

namespace tlap {

// Reaction term f with derivative and the radius delta of the window (-delta, delta)
// on which f is nondecreasing.
struct Nonlinearity {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> fprime;
  double delta = 0.0;

  double operator()(double u) const { return f(u); }
};

// f(u) = u - u^3, delta = 1/sqrt(3).
Nonlinearity make_allen_cahn();

// f(u) = a u + b |u|^(gamma-1) u with a > 0, gamma > 1. delta is the largest
// value <= 1 for which f' >= 0 on a 10^4-point sample of [-delta, delta], found
// by bisection.
Nonlinearity make_power_family(double a, double b, double gamma);

// Reaction terms used by the finite-difference comparison experiments. They do
// not satisfy the positivity assumption and are rejected by the radial solver.
Nonlinearity make_zero_reaction();
Nonlinearity make_linear_reaction(double slope);

// Result of sampling the structural assumptions f(0)=0, f>0 on (0,delta),
// f' >= -1e-12 on (-delta,delta) and f' consistent with centered differences.
struct AssumptionCheck {
  bool f_zero_at_origin = false;
  bool positive_on_window = false;
  bool nondecreasing_on_window = false;
  bool derivative_consistent = false;
  double max_derivative_mismatch = 0.0;

  bool ok() const {
    return f_zero_at_origin && positive_on_window && nondecreasing_on_window && derivative_consistent;
  }
};

AssumptionCheck check_assumptions(const Nonlinearity& nl, int samples = 2001);

// Largest |f'| over (-1, 1), sampled; used by the finite-difference step bound.
double sup_abs_derivative(const Nonlinearity& nl, double lo = -1.0, double hi = 1.0,
                          int samples = 4001);

}  // namespace tlap
