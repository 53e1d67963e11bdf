#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tlap/execution.hpp"
#include "tlap/symmetric_matrix.hpp"

namespace tlap {

// Q_n = {0 < (n x + y)/2 < pi, -pi/2 < (n x - y)/2 < pi/2}, a parallelogram of
// area 2 pi^2 / n whose x-extent shrinks like 1/n.
class DomainQn {
 public:
  explicit DomainQn(int n);

  int n() const noexcept { return n_; }
  // Strip coordinates s = (n x + y)/2 in (0, pi), t = (n x - y)/2 in (-pi/2, pi/2).
  double s_coord(double x, double y) const noexcept { return 0.5 * (n_ * x + y); }
  double t_coord(double x, double y) const noexcept { return 0.5 * (n_ * x - y); }
  // Interior with both strip coordinates at least `margin` inside their intervals.
  bool contains(double x, double y, double margin = kInteriorMargin) const noexcept;

  double x_min() const noexcept;
  double x_max() const noexcept;
  double y_min() const noexcept;
  double y_max() const noexcept;
  double exact_area() const noexcept;

  static constexpr double kInteriorMargin = 1e-9;

 private:
  int n_;
};

// -(sin(n x) + sin y) = -2 sin((n x + y)/2) cos((n x - y)/2)
double w_n(int n, double x, double y);
// diag(n^2 sin(n x), sin y)
SymmetricMatrix hessian_w_n(int n, double x, double y);

enum class Region : unsigned char { none, a, b, c, both };
const char* to_string(Region r);

struct ScanWitness {
  double x = 0.0;
  double y = 0.0;
  double residual = 0.0;
  std::string reason;
};

struct EigenScanReport {
  int n = 0;
  std::size_t grid = 0;
  std::size_t interior_points = 0;
  double max_residual = 0.0;  // max of P-_1(D^2 w_n) + w_n over interior samples
  double max_w = 0.0;         // max of w_n over interior samples (must be < 0)
  double max_boundary_abs_w = 0.0;
  std::size_t count_a = 0;    // sin(nx) > 0, sin y > 0
  std::size_t count_b = 0;    // sin(nx) <= 0, sin y >= 0
  std::size_t count_c = 0;    // sin(nx) >= 0, sin y <= 0
  std::size_t count_both = 0; // on a sin = 0 line where two chains hold
  std::size_t chain_failures = 0;
  double estimated_area = 0.0;
  double box_x_min = 0.0, box_x_max = 0.0, box_y_min = 0.0, box_y_max = 0.0;
  std::vector<ScanWitness> failures;

  bool all_regions_exercised() const { return count_a > 0 && count_b > 0 && count_c > 0; }
  bool passed() const;
};

inline constexpr double kEigenScanTol = 1e-12;
inline constexpr double kBoundaryTol = 1e-12;

struct ScanPoint {
  double x, y, w, residual;
  Region region;
};

// grid x grid cell-centre samples over the bounding box of Q_n; grid >= 50.
EigenScanReport scan_inequality(int n, std::size_t grid, Exec exec = Exec::parallel);
// Interior samples of the same scan, in row-major order (for CSV dumps).
std::vector<ScanPoint> scan_points(int n, std::size_t grid);

// Midpoint-rule area of Q_n on a square lattice with at least `samples` points.
double area_estimate(int n, std::size_t samples, Exec exec = Exec::parallel);

struct MuCertificate {
  int n = 0;
  double bound = 1.0;
  std::string kind = "grid-evidence certificate";
  std::string statement;
  EigenScanReport scan;
};

// Runs the scan and, when it passes, emits mu_1^-(Q_n) <= 1 as a grid-evidence
// certificate. Throws VerificationError otherwise.
MuCertificate mu_upper_bound_report(int n, std::size_t grid = 200, Exec exec = Exec::parallel);

}  // namespace tlap
