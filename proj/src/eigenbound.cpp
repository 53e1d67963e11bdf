#include "tlap/eigenbound.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "format.hpp"
#include "tlap/errors.hpp"
#include "tlap/operator_core.hpp"

namespace tlap {

namespace {

using std::numbers::pi;

constexpr std::size_t kMaxFailuresKept = 16;

struct PointEval {
  double w = 0.0;
  double residual = 0.0;
  Region region = Region::none;
  bool chain_ok = true;
};

// Region by the signs of sin(nx), sin(y) and the bound chain that justifies
// P-_1(D^2 w_n) <= -w_n there.
PointEval evaluate_point(int n, double x, double y) {
  PointEval e;
  const double sx = std::sin(n * x);
  const double sy = std::sin(y);
  e.w = w_n(n, x, y);
  const double p = pminus_k(hessian_w_n(n, x, y), 1);
  e.residual = p + e.w;
  const double minus_w = -e.w;
  const double n2sx = static_cast<double>(n) * n * sx;
  const double tol = kEigenScanTol;

  if (sx > 0.0 && sy > 0.0) {
    e.region = Region::a;
    e.chain_ok = p <= sy + tol && sy <= minus_w + tol;
    return e;
  }
  const bool in_b = sx <= 0.0 && sy >= 0.0;
  const bool in_c = sx >= 0.0 && sy <= 0.0;
  const bool chain_b = p <= n2sx + tol && n2sx <= sx + tol && sx <= minus_w + tol;
  const bool chain_c = p <= sy + tol && sy <= minus_w + tol;
  if (in_b && in_c && chain_b && chain_c) {
    e.region = Region::both;
  } else if (in_b && chain_b) {
    e.region = Region::b;
  } else if (in_c && chain_c) {
    e.region = Region::c;
  } else if (in_b || in_c) {
    e.region = in_b ? Region::b : Region::c;
    e.chain_ok = false;
  } else {
    e.region = Region::none;
    e.chain_ok = false;
  }
  return e;
}

struct Lattice {
  double x0, y0, dx, dy;
  std::size_t m;
  double x(std::size_t i) const { return x0 + (static_cast<double>(i) + 0.5) * dx; }
  double y(std::size_t j) const { return y0 + (static_cast<double>(j) + 0.5) * dy; }
};

Lattice lattice_for(const DomainQn& q, std::size_t m) {
  return Lattice{q.x_min(), q.y_min(), (q.x_max() - q.x_min()) / static_cast<double>(m),
                 (q.y_max() - q.y_min()) / static_cast<double>(m), m};
}

struct RowAccumulator {
  std::size_t interior = 0;
  bool any = false;
  double max_residual = 0.0;
  double max_w = 0.0;
  std::size_t a = 0, b = 0, c = 0, both = 0, chain_failures = 0;
  std::vector<ScanWitness> failures;

  void add(double x, double y, const PointEval& e) {
    ++interior;
    if (!any || e.residual > max_residual) max_residual = e.residual;
    if (!any || e.w > max_w) max_w = e.w;
    any = true;
    switch (e.region) {
      case Region::a: ++a; break;
      case Region::b: ++b; break;
      case Region::c: ++c; break;
      case Region::both: ++both; break;
      case Region::none: break;
    }
    if (!e.chain_ok) ++chain_failures;
    std::string reason;
    if (e.residual > kEigenScanTol) reason = "inequality";
    else if (!(e.w < 0.0)) reason = "w_n not negative";
    else if (!e.chain_ok) reason = "region chain";
    if (!reason.empty() && failures.size() < kMaxFailuresKept) {
      failures.push_back({x, y, e.residual, reason});
    }
  }

  void merge(const RowAccumulator& o) {
    if (o.interior == 0) return;
    if (!any || o.max_residual > max_residual) max_residual = o.max_residual;
    if (!any || o.max_w > max_w) max_w = o.max_w;
    any = true;
    interior += o.interior;
    a += o.a;
    b += o.b;
    c += o.c;
    both += o.both;
    chain_failures += o.chain_failures;
    for (const ScanWitness& w : o.failures) {
      if (failures.size() < kMaxFailuresKept) failures.push_back(w);
    }
  }
};

double boundary_max_abs_w(int n, std::size_t samples_per_edge) {
  const DomainQn q(n);
  double worst = 0.0;
  auto at = [&](double s, double t) {
    // x = (s + t)/n, y = s - t
    const double x = (s + t) / n;
    const double y = s - t;
    worst = std::max(worst, std::abs(w_n(n, x, y)));
  };
  for (std::size_t i = 0; i <= samples_per_edge; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(samples_per_edge);
    at(0.0, -0.5 * pi + u * pi);
    at(pi, -0.5 * pi + u * pi);
    at(u * pi, -0.5 * pi);
    at(u * pi, 0.5 * pi);
  }
  return worst;
}

void fill_report_from(EigenScanReport& rep, const RowAccumulator& acc, const DomainQn& q) {
  rep.interior_points = acc.interior;
  rep.max_residual = acc.max_residual;
  rep.max_w = acc.max_w;
  rep.count_a = acc.a;
  rep.count_b = acc.b;
  rep.count_c = acc.c;
  rep.count_both = acc.both;
  rep.chain_failures = acc.chain_failures;
  rep.failures = acc.failures;
  rep.box_x_min = q.x_min();
  rep.box_x_max = q.x_max();
  rep.box_y_min = q.y_min();
  rep.box_y_max = q.y_max();
  const double box = (q.x_max() - q.x_min()) * (q.y_max() - q.y_min());
  rep.estimated_area = box * static_cast<double>(acc.interior) /
                       (static_cast<double>(rep.grid) * static_cast<double>(rep.grid));
  rep.max_boundary_abs_w = boundary_max_abs_w(rep.n, 4 * rep.grid);
}

}  // namespace

DomainQn::DomainQn(int n) : n_(n) {
  if (n < 1) throw InputError("domain index n must be >= 1");
}

bool DomainQn::contains(double x, double y, double margin) const noexcept {
  const double s = s_coord(x, y);
  const double t = t_coord(x, y);
  return s >= margin && s <= pi - margin && t >= -0.5 * pi + margin && t <= 0.5 * pi - margin;
}

double DomainQn::x_min() const noexcept { return -0.5 * pi / n_; }
double DomainQn::x_max() const noexcept { return 1.5 * pi / n_; }
double DomainQn::y_min() const noexcept { return -0.5 * pi; }
double DomainQn::y_max() const noexcept { return 1.5 * pi; }
double DomainQn::exact_area() const noexcept { return 2.0 * pi * pi / n_; }

double w_n(int n, double x, double y) { return -(std::sin(n * x) + std::sin(y)); }

SymmetricMatrix hessian_w_n(int n, double x, double y) {
  const double nn = static_cast<double>(n) * n;
  return SymmetricMatrix::diagonal({nn * std::sin(n * x), std::sin(y)});
}

const char* to_string(Region r) {
  switch (r) {
    case Region::none: return "none";
    case Region::a: return "A";
    case Region::b: return "B";
    case Region::c: return "C";
    case Region::both: return "both";
  }
  return "none";
}

bool EigenScanReport::passed() const {
  return interior_points > 0 && max_residual <= kEigenScanTol && max_w < 0.0 &&
         chain_failures == 0 && max_boundary_abs_w <= kBoundaryTol && failures.empty();
}

EigenScanReport scan_inequality(int n, std::size_t grid, Exec exec) {
  if (grid < 50) throw InputError("eigenvalue scan needs a grid of at least 50 x 50");
  const DomainQn q(n);
  const Lattice lat = lattice_for(q, grid);

  EigenScanReport rep;
  rep.n = n;
  rep.grid = grid;

  RowAccumulator total;
  if (exec == Exec::serial) {
    for (std::size_t j = 0; j < grid; ++j) {
      for (std::size_t i = 0; i < grid; ++i) {
        const double x = lat.x(i), y = lat.y(j);
        if (q.contains(x, y)) total.add(x, y, evaluate_point(n, x, y));
      }
    }
  } else {
    std::vector<RowAccumulator> rows(grid);
    const auto m = static_cast<std::ptrdiff_t>(grid);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < m; ++j) {
      RowAccumulator& acc = rows[static_cast<std::size_t>(j)];
      const double y = lat.y(static_cast<std::size_t>(j));
      for (std::size_t i = 0; i < grid; ++i) {
        const double x = lat.x(i);
        if (q.contains(x, y)) acc.add(x, y, evaluate_point(n, x, y));
      }
    }
    for (const RowAccumulator& r : rows) total.merge(r);
  }
  fill_report_from(rep, total, q);
  return rep;
}

std::vector<ScanPoint> scan_points(int n, std::size_t grid) {
  if (grid < 50) throw InputError("eigenvalue scan needs a grid of at least 50 x 50");
  const DomainQn q(n);
  const Lattice lat = lattice_for(q, grid);
  std::vector<ScanPoint> out;
  for (std::size_t j = 0; j < grid; ++j) {
    for (std::size_t i = 0; i < grid; ++i) {
      const double x = lat.x(i), y = lat.y(j);
      if (!q.contains(x, y)) continue;
      const PointEval e = evaluate_point(n, x, y);
      out.push_back({x, y, e.w, e.residual, e.region});
    }
  }
  return out;
}

double area_estimate(int n, std::size_t samples, Exec exec) {
  if (samples < 100000) throw InputError("area estimate needs at least 1e5 samples");
  const DomainQn q(n);
  const auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(samples))));
  const Lattice lat = lattice_for(q, m);

  long long count = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m);
  if (exec == Exec::serial) {
    for (std::ptrdiff_t j = 0; j < rows; ++j) {
      for (std::size_t i = 0; i < m; ++i) count += q.contains(lat.x(i), lat.y(j), 0.0) ? 1 : 0;
    }
  } else {
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::ptrdiff_t j = 0; j < rows; ++j) {
      for (std::size_t i = 0; i < m; ++i) count += q.contains(lat.x(i), lat.y(j), 0.0) ? 1 : 0;
    }
  }
  const double box = (q.x_max() - q.x_min()) * (q.y_max() - q.y_min());
  return box * static_cast<double>(count) / (static_cast<double>(m) * static_cast<double>(m));
}

MuCertificate mu_upper_bound_report(int n, std::size_t grid, Exec exec) {
  MuCertificate cert;
  cert.n = n;
  cert.scan = scan_inequality(n, grid, exec);
  if (!cert.scan.passed()) {
    throw VerificationError("scan of Q_" + std::to_string(n) +
                            " failed; no eigenvalue bound is emitted (max residual " +
                            detail::format_number(cert.scan.max_residual) + ")");
  }
  cert.statement = "w_n < 0 at all " + std::to_string(cert.scan.interior_points) +
                   " interior samples of Q_" + std::to_string(n) +
                   ", |w_n| <= " + detail::format_number(kBoundaryTol) +
                   " on the boundary, and P-_1(D^2 w_n) + w_n <= " +
                   detail::format_number(kEigenScanTol) +
                   " at every interior sample; hence mu_1^-(Q_" + std::to_string(n) + ") <= 1";
  return cert;
}

}  // namespace tlap
