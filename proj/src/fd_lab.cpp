#include "tlap/fd_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "tlap/catalog.hpp"
#include "tlap/errors.hpp"
#include "tlap/profile.hpp"

namespace tlap {

namespace {

bool fits(const GridField2D& g, std::size_t i, std::size_t j, const Direction& e) {
  const auto ai = static_cast<std::size_t>(std::abs(e.a));
  const auto bj = static_cast<std::size_t>(std::abs(e.b));
  return ai <= i && i + ai < g.nx() && bj <= j && j + bj < g.ny();
}

}  // namespace

std::vector<Direction> make_stencil(int radius) {
  if (radius < 1) throw InputError("stencil radius must be >= 1");
  std::vector<Direction> out;
  for (int a = 0; a <= radius; ++a) {
    for (int b = -radius; b <= radius; ++b) {
      if (a == 0 && b <= 0) continue;
      if (std::gcd(a, std::abs(b)) != 1) continue;
      out.push_back({a, b});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Direction& l, const Direction& r) {
    const int sl = std::max(std::abs(l.a), std::abs(l.b));
    const int sr = std::max(std::abs(r.a), std::abs(r.b));
    if (sl != sr) return sl < sr;
    return std::atan2(l.b, l.a) < std::atan2(r.b, r.a);
  });
  return out;
}

GridField2D::GridField2D(const GridSpec& spec, int stencil_radius)
    : h_(spec.h), x0_(spec.x_lo), y0_(spec.y_lo), radius_(stencil_radius) {
  if (!(spec.h > 0.0)) throw InputError("grid spacing h must be positive");
  if (!(spec.x_hi > spec.x_lo) || !(spec.y_hi > spec.y_lo)) throw InputError("empty grid box");
  const double cx = (spec.x_hi - spec.x_lo) / spec.h;
  const double cy = (spec.y_hi - spec.y_lo) / spec.h;
  if (std::abs(cx - std::round(cx)) > 1e-9 * cx || std::abs(cy - std::round(cy)) > 1e-9 * cy) {
    throw InputError("grid spacing h must divide the box side lengths");
  }
  nx_ = static_cast<std::size_t>(std::llround(cx)) + 1;
  ny_ = static_cast<std::size_t>(std::llround(cy)) + 1;
  if (nx_ < 3 || ny_ < 3) throw InputError("grid needs at least one interior node");
  values_.assign(nx_ * ny_, 0.0);
  boundary_.assign(nx_ * ny_, 0);
  for (std::size_t j = 0; j < ny_; ++j) {
    for (std::size_t i = 0; i < nx_; ++i) {
      if (i == 0 || j == 0 || i + 1 == nx_ || j + 1 == ny_) boundary_[j * nx_ + i] = 1;
    }
  }
  stencil_ = make_stencil(stencil_radius);
}

double discrete_lambda1(const GridField2D& field, std::size_t i, std::size_t j) {
  const double h2 = field.h() * field.h();
  const double center = field.at(i, j);
  double best = std::numeric_limits<double>::infinity();
  for (const Direction& e : field.stencil()) {
    if (!fits(field, i, j, e)) continue;
    const double fwd = field.at(i + e.a, j + e.b);
    const double bwd = field.at(i - e.a, j - e.b);
    const double weight = 1.0 / (h2 * e.norm2());
    best = std::min(best, (fwd - 2.0 * center + bwd) * weight);
  }
  return best;
}

double max_monotone_tau(double h, const Nonlinearity& f) {
  return (0.5 * h * h) / (1.0 + h * h * sup_abs_derivative(f));
}

double default_tau(double h, const Nonlinearity& f) { return 0.9 * max_monotone_tau(h, f); }

void initialize_from_boundary(GridField2D& field, const BoundaryData& g) {
  const std::size_t nx = field.nx(), ny = field.ny();
  const double xl = field.x(0), xr = field.x(nx - 1);
  const double yb = field.y(0), yt = field.y(ny - 1);
  const double g_lb = g(xl, yb), g_rb = g(xr, yb), g_lt = g(xl, yt), g_rt = g(xr, yt);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = field.x(i), y = field.y(j);
      if (field.is_boundary(i, j)) {
        field.at(i, j) = g(x, y);
        continue;
      }
      const double s = static_cast<double>(i) / static_cast<double>(nx - 1);
      const double t = static_cast<double>(j) / static_cast<double>(ny - 1);
      field.at(i, j) = (1 - s) * g(xl, y) + s * g(xr, y) + (1 - t) * g(x, yb) + t * g(x, yt) -
                       ((1 - s) * (1 - t) * g_lb + s * (1 - t) * g_rb + (1 - s) * t * g_lt +
                        s * t * g_rt);
    }
  }
}

double sweep_serial(const GridField2D& in, GridField2D& out, const Nonlinearity& f, double tau) {
  double sup = 0.0;
  for (std::size_t j = 1; j + 1 < in.ny(); ++j) {
    for (std::size_t i = 1; i + 1 < in.nx(); ++i) {
      const double u = in.at(i, j);
      const double next = u + tau * (discrete_lambda1(in, i, j) + f.f(u));
      out.at(i, j) = next;
      sup = std::max(sup, std::abs(next - u));
    }
  }
  return sup;
}

double sweep_parallel(const GridField2D& in, GridField2D& out, const Nonlinearity& f, double tau) {
  const std::size_t nx = in.nx(), ny = in.ny();
  const double h2 = in.h() * in.h();
  const std::vector<Direction>& dirs = in.stencil();
  std::vector<double> weight(dirs.size());
  std::vector<std::ptrdiff_t> offset(dirs.size());
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    weight[d] = 1.0 / (h2 * dirs[d].norm2());
    offset[d] = static_cast<std::ptrdiff_t>(dirs[d].b) * static_cast<std::ptrdiff_t>(nx) + dirs[d].a;
  }
  const double* u = in.values().data();
  double* v = out.values().data();
  const auto rows = static_cast<std::ptrdiff_t>(ny) - 1;
  double sup = 0.0;

#pragma omp parallel for reduction(max : sup) schedule(static)
  for (std::ptrdiff_t jj = 1; jj < rows; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    const std::size_t room_y = std::min(j, ny - 1 - j);
    for (std::size_t i = 1; i + 1 < nx; ++i) {
      const std::size_t room_x = std::min(i, nx - 1 - i);
      const std::size_t idx = j * nx + i;
      const double c = u[idx];
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t d = 0; d < dirs.size(); ++d) {
        if (static_cast<std::size_t>(std::abs(dirs[d].a)) > room_x ||
            static_cast<std::size_t>(std::abs(dirs[d].b)) > room_y) {
          continue;
        }
        const double val = (u[idx + offset[d]] - 2.0 * c + u[idx - offset[d]]) * weight[d];
        best = std::min(best, val);
      }
      const double next = c + tau * (best + f.f(c));
      v[idx] = next;
      sup = std::max(sup, std::abs(next - c));
    }
  }
  return sup;
}

double fixed_point_residual(const GridField2D& field, const Nonlinearity& f) {
  double sup = 0.0;
  for (std::size_t j = 1; j + 1 < field.ny(); ++j) {
    for (std::size_t i = 1; i + 1 < field.nx(); ++i) {
      sup = std::max(sup, std::abs(discrete_lambda1(field, i, j) + f.f(field.at(i, j))));
    }
  }
  return sup;
}

SolveResult solve_dirichlet(const Nonlinearity& f, const BoundaryData& g, const GridSpec& grid,
                            const SolveConfig& cfg) {
  GridField2D a(grid, cfg.stencil_radius);
  const double tau = cfg.tau > 0.0 ? cfg.tau : default_tau(grid.h, f);
  if (tau > max_monotone_tau(grid.h, f)) {
    throw InputError("pseudo-time step exceeds the monotone bound");
  }
  initialize_from_boundary(a, g);
  GridField2D b = a;

  SolveResult res{a};
  res.tau = tau;
  GridField2D* cur = &a;
  GridField2D* nxt = &b;
  double update = std::numeric_limits<double>::infinity();
  std::size_t it = 0;
  while (it < cfg.max_iterations) {
    update = cfg.exec == Exec::serial ? sweep_serial(*cur, *nxt, f, tau)
                                      : sweep_parallel(*cur, *nxt, f, tau);
    std::swap(cur, nxt);
    ++it;
    if (!std::isfinite(update)) break;
    if (update <= cfg.update_tol) break;
  }
  res.field = *cur;
  res.iterations = it;
  res.final_update = update;
  res.converged = std::isfinite(update) && update <= cfg.update_tol;
  res.max_fixed_point_residual = fixed_point_residual(res.field, f);
  return res;
}

ComparisonResult discrete_comparison_test(const Nonlinearity& f, const BoundaryData& g1,
                                          const BoundaryData& g2, const GridSpec& grid,
                                          const SolveConfig& cfg) {
  const SolveResult s1 = solve_dirichlet(f, g1, grid, cfg);
  const SolveResult s2 = solve_dirichlet(f, g2, grid, cfg);
  ComparisonResult out;
  out.both_converged = s1.converged && s2.converged;
  bool first = true;
  for (std::size_t j = 0; j < s1.field.ny(); ++j) {
    for (std::size_t i = 0; i < s1.field.nx(); ++i) {
      const double diff = s1.field.at(i, j) - s2.field.at(i, j);
      if (first || diff > out.max_violation) {
        out.max_violation = diff;
        out.witness_i = i;
        out.witness_j = j;
        first = false;
      }
    }
  }
  out.passed = out.max_violation <= 1e-8 && out.both_converged;
  return out;
}

FlatnessStats flatness_probe(const GridField2D& field, Axis axis) {
  FlatnessStats st;
  // Interior nodes only; boundary values are data, not solution.
  const std::size_t lines = (axis == Axis::y ? field.ny() : field.nx()) - 2;
  const std::size_t along = (axis == Axis::y ? field.nx() : field.ny()) - 2;
  st.per_line.resize(lines);
  for (std::size_t l = 0; l < lines; ++l) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t m = 0; m < along; ++m) {
      const double v = axis == Axis::y ? field.at(m + 1, l + 1) : field.at(l + 1, m + 1);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    st.per_line[l] = hi - lo;
  }
  st.sup_oscillation = *std::max_element(st.per_line.begin(), st.per_line.end());
  st.mean_oscillation = std::accumulate(st.per_line.begin(), st.per_line.end(), 0.0) /
                        static_cast<double>(lines);
  return st;
}

namespace {

BoundaryData profile_in_y(Profile1D p) {
  return [p = std::move(p)](double, double y) { return p.value(y); };
}

}  // namespace

BoundaryData parse_boundary(const std::string& spec) {
  if (spec == "halfline-tanh-y") return profile_in_y(make_halfline_tanh());
  if (spec == "plain-tanh-y") return profile_in_y(make_plain_tanh());
  if (spec == "zero") return [](double, double) { return 0.0; };
  const std::size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (colon != std::string::npos && (head == "tanh-shifted-y" || head == "constant")) {
    const ProfileSpec ps = parse_profile((head == "constant" ? "constant" : "tanh-shifted") +
                                         spec.substr(colon));
    return profile_in_y(ps.profile);
  }
  throw CatalogLookupError("unknown boundary data '" + spec + "'");
}

BoundaryData exact_solution_for(const std::string& spec) {
  if (spec == "halfline-tanh-y" || spec == "zero" || spec.rfind("tanh-shifted-y:", 0) == 0) {
    return parse_boundary(spec);
  }
  return {};
}

double interior_sup_error(const GridField2D& field, const BoundaryData& exact) {
  double sup = 0.0;
  for (std::size_t j = 1; j + 1 < field.ny(); ++j) {
    for (std::size_t i = 1; i + 1 < field.nx(); ++i) {
      sup = std::max(sup, std::abs(field.at(i, j) - exact(field.x(i), field.y(j))));
    }
  }
  return sup;
}

}  // namespace tlap
