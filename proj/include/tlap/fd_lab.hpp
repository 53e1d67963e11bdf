#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tlap/execution.hpp"
#include "tlap/nonlinearity.hpp"

namespace tlap {

// Lattice direction (a, b) with coprime coordinates; one representative per +/- pair.
struct Direction {
  int a = 0;
  int b = 0;
  int norm2() const { return a * a + b * b; }
  friend bool operator==(const Direction&, const Direction&) = default;
};

// All coprime directions with max(|a|, |b|) <= radius, ordered by sup-norm and
// then by angle in (-pi/2, pi/2]. Radius 2 gives 8 directions, radius 3 gives 16.
std::vector<Direction> make_stencil(int radius);

struct GridSpec {
  double x_lo = -2.0;
  double x_hi = 2.0;
  double y_lo = -2.0;
  double y_hi = 2.0;
  double h = 0.05;
};

class GridField2D {
 public:
  GridField2D(const GridSpec& spec, int stencil_radius);

  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return ny_; }
  double h() const noexcept { return h_; }
  double x(std::size_t i) const noexcept { return x0_ + static_cast<double>(i) * h_; }
  double y(std::size_t j) const noexcept { return y0_ + static_cast<double>(j) * h_; }

  double at(std::size_t i, std::size_t j) const noexcept { return values_[j * nx_ + i]; }
  double& at(std::size_t i, std::size_t j) noexcept { return values_[j * nx_ + i]; }
  bool is_boundary(std::size_t i, std::size_t j) const noexcept { return boundary_[j * nx_ + i] != 0; }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  const std::vector<Direction>& stencil() const noexcept { return stencil_; }
  int stencil_radius() const noexcept { return radius_; }

 private:
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  double h_ = 0.0;
  double x0_ = 0.0;
  double y0_ = 0.0;
  int radius_ = 1;
  std::vector<double> values_;
  std::vector<std::uint8_t> boundary_;
  std::vector<Direction> stencil_;
};

// min over stencil directions e that fit inside the grid of
// (u(x + h e) - 2 u(x) + u(x - h e)) / (h^2 |e|^2), at an interior node.
double discrete_lambda1(const GridField2D& field, std::size_t i, std::size_t j);

struct SolveConfig {
  double tau = 0.0;  // 0 selects default_tau
  std::size_t max_iterations = 400000;
  double update_tol = 1e-10;  // on the sup-norm of one sweep's update
  int stencil_radius = 2;
  Exec exec = Exec::parallel;
};

// 0.9 * (h^2 / 2) / (1 + h^2 sup_{(-1,1)} |f'|): keeps each sweep monotone in
// every node value.
double default_tau(double h, const Nonlinearity& f);
double max_monotone_tau(double h, const Nonlinearity& f);

using BoundaryData = std::function<double(double x, double y)>;

// Transfinite bilinear blend of the boundary values into the interior.
void initialize_from_boundary(GridField2D& field, const BoundaryData& g);

// One Jacobi sweep u_new = u + tau (lambda1_h(u) + f(u)) on interior nodes;
// returns sup |u_new - u|. The serial version is the reference loop.
double sweep_serial(const GridField2D& in, GridField2D& out, const Nonlinearity& f, double tau);
double sweep_parallel(const GridField2D& in, GridField2D& out, const Nonlinearity& f, double tau);

struct SolveResult {
  GridField2D field;
  std::size_t iterations = 0;
  double final_update = 0.0;
  double tau = 0.0;
  bool converged = false;
  double max_fixed_point_residual = 0.0;  // sup over interior of |lambda1_h(u) + f(u)|
};

// Pseudo-time marching to a fixed point. A non-converged run returns the last
// iterate with converged = false. Throws InputError if tau violates the
// monotone bound.
SolveResult solve_dirichlet(const Nonlinearity& f, const BoundaryData& g, const GridSpec& grid,
                            const SolveConfig& cfg);

double fixed_point_residual(const GridField2D& field, const Nonlinearity& f);

struct ComparisonResult {
  bool passed = true;
  double max_violation = 0.0;  // max of u1 - u2
  std::size_t witness_i = 0;
  std::size_t witness_j = 0;
  bool both_converged = true;
};

// Solves with g1 <= g2 and checks u1 <= u2 + 1e-8 pointwise.
ComparisonResult discrete_comparison_test(const Nonlinearity& f, const BoundaryData& g1,
                                          const BoundaryData& g2, const GridSpec& grid,
                                          const SolveConfig& cfg);

enum class Axis { x, y };

struct FlatnessStats {
  double sup_oscillation = 0.0;   // sup over lines of (max - min) along the line
  double mean_oscillation = 0.0;
  std::vector<double> per_line;
};

// Lines orthogonal to `axis` (axis y: rows of constant y, variation in x), over
// interior nodes. Zero means the field depends on the `axis` coordinate only.
FlatnessStats flatness_probe(const GridField2D& field, Axis axis);

// Named boundary data: halfline-tanh-y, plain-tanh-y, tanh-shifted-y:c, zero, constant:a.
BoundaryData parse_boundary(const std::string& spec);
// Exact solution for the manufactured cases (halfline-tanh-y, tanh-shifted-y:c,
// zero, constant:0); empty function otherwise.
BoundaryData exact_solution_for(const std::string& spec);

// sup over interior nodes of |u - exact|.
double interior_sup_error(const GridField2D& field, const BoundaryData& exact);

}  // namespace tlap
