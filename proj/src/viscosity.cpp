#include "tlap/viscosity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "format.hpp"
#include "tlap/errors.hpp"
#include "tlap/operator_core.hpp"

namespace tlap {

namespace {

double residual_at(const Candidate& c, double t) {
  const std::vector<double> x = embed_scan_point(c, t);
  const SymmetricMatrix h = hessian_of_candidate(c, x);
  return pminus_k(h, c.op_index()) + c.nonlinearity().f(c.profile().value(t));
}

// Residual with the one-sided second derivative at a junction of a 1D profile.
double one_sided_residual(const Candidate& c, const Corner& j, bool from_left) {
  SymmetricMatrix h(c.ambient_dim());
  h.set(c.ambient_dim() - 1, c.ambient_dim() - 1, c.profile().d2(j.t0, from_left));
  return pminus_k(h, c.op_index()) + c.nonlinearity().f(j.value);
}

void reject_corner_loci(const Candidate& c, std::span<const double> grid) {
  if (c.kind() != CandidateKind::one_dimensional) return;
  for (double t : grid) {
    if (auto j = c.profile().junction_near(t, kCornerExclusion)) {
      throw SingularPointError("scan point " + detail::format_number(t) +
                                   " lies on the junction at t0 = " + detail::format_number(j->t0) +
                                   "; route it to the corner rules",
                               j->t0);
    }
  }
}

void add_witnesses(const std::vector<ResidualSample>& samples, double tol, bool subsolution,
                   std::size_t cap, std::vector<Witness>& out) {
  auto violates = [&](double r) { return subsolution ? r < -tol : r > tol; };
  std::size_t worst = samples.size();
  std::size_t taken = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double r = samples[i].residual;
    if (!violates(r)) continue;
    if (worst == samples.size() ||
        (subsolution ? r < samples[worst].residual : r > samples[worst].residual)) {
      worst = i;
    }
    if (taken < cap) {
      out.push_back({samples[i].t, r, subsolution ? "subsolution" : "supersolution",
                     "classical-residual", false});
      ++taken;
    }
  }
  if (worst != samples.size() && taken == cap) {
    out.push_back({samples[worst].t, samples[worst].residual,
                   subsolution ? "subsolution" : "supersolution", "classical-residual/worst", false});
  }
}

}  // namespace

const char* to_string(Side side) {
  switch (side) {
    case Side::smooth: return "smooth";
    case Side::corner_left: return "corner-left";
    case Side::corner_right: return "corner-right";
  }
  return "smooth";
}

const char* to_string(Outcome o) { return o == Outcome::pass ? "pass" : "fail"; }

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::constant: return "constant";
    case Monotonicity::nondecreasing: return "nondecreasing";
    case Monotonicity::nonincreasing: return "nonincreasing";
    case Monotonicity::non_monotone: return "non-monotone";
  }
  return "non-monotone";
}

const char* to_string(FlagStatus s) {
  switch (s) {
    case FlagStatus::ok: return "ok";
    case FlagStatus::violated: return "violated";
    case FlagStatus::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2 || !(hi > lo)) throw InputError("uniform grid needs lo < hi and >= 2 points");
  std::vector<double> g(points);
  const double span = hi - lo;
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) g[i] = lo + span * (static_cast<double>(i) / last);
  g.back() = hi;
  return g;
}

std::vector<double> default_grid(CandidateKind kind) {
  if (kind == CandidateKind::radial) return uniform_grid(1e-3, 20.0, 2001);
  std::vector<double> g(4001);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (static_cast<double>(i) - 2000.0) / 100.0;
  return g;
}

std::vector<ResidualSample> scan_smooth_residuals(const Candidate& c, std::span<const double> grid,
                                                  Exec exec) {
  reject_corner_loci(c, grid);
  std::vector<ResidualSample> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = {grid[i], residual_at(c, grid[i]), Side::smooth};
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = {grid[i], residual_at(c, grid[i]), Side::smooth};
  return out;
}

CornerOutcome check_corner(const Candidate& c, const Corner& corner, double tol) {
  if (c.kind() != CandidateKind::one_dimensional) {
    throw InputError("corner rules apply to one-dimensional candidates only");
  }
  CornerOutcome out;
  out.corner = corner;
  out.f_value = c.nonlinearity().f(corner.value);

  if (!corner.is_true_corner()) {
    out.weak = true;
    out.two_sided = {
        {corner.t0, one_sided_residual(c, corner, true), Side::corner_left},
        {corner.t0, one_sided_residual(c, corner, false), Side::corner_right},
    };
    const bool sub = std::all_of(out.two_sided.begin(), out.two_sided.end(),
                                 [tol](const ResidualSample& s) { return s.residual >= -tol; });
    const bool super = std::all_of(out.two_sided.begin(), out.two_sided.end(),
                                   [tol](const ResidualSample& s) { return s.residual <= tol; });
    out.subsolution = sub ? Outcome::pass : Outcome::fail;
    out.supersolution = super ? Outcome::pass : Outcome::fail;
    out.subsolution_rule = "weak-junction/two-sided-residual";
    out.supersolution_rule = "weak-junction/two-sided-residual";
    return out;
  }

  if (corner.is_convex()) {
    out.subsolution = Outcome::pass;
    out.subsolution_rule = "convex-corner/no-upper-test";
    if (out.f_value <= tol) {
      out.supersolution = Outcome::pass;
      out.supersolution_rule = "convex-corner/tangential-courant-fischer";
    } else {
      out.supersolution = Outcome::fail;
      out.supersolution_rule = "convex-corner/flat-lower-test";
      out.derived_rule = true;
    }
  } else {
    out.supersolution = Outcome::pass;
    out.supersolution_rule = "concave-corner/no-lower-test";
    out.subsolution = Outcome::fail;
    out.subsolution_rule = "concave-corner/steep-upper-test";
  }
  return out;
}

Verdict verify(const Candidate& c, std::span<const double> grid, const VerifyOptions& opts) {
  Verdict v;
  v.candidate = c.name();
  v.kind = to_string(c.kind());
  v.n = c.ambient_dim();
  v.k = c.op_index();
  v.tol = opts.tol;

  std::vector<double> smooth;
  smooth.reserve(grid.size());
  for (double t : grid) {
    if (c.kind() == CandidateKind::one_dimensional &&
        c.profile().junction_near(t, kCornerExclusion)) {
      continue;
    }
    smooth.push_back(t);
  }

  const std::vector<ResidualSample> samples = scan_smooth_residuals(c, smooth, opts.exec);
  v.smooth_samples = samples.size();
  if (!samples.empty()) {
    v.min_residual = samples.front().residual;
    v.max_residual = samples.front().residual;
    for (const ResidualSample& s : samples) {
      v.min_residual = std::min(v.min_residual, s.residual);
      v.max_residual = std::max(v.max_residual, s.residual);
    }
  }
  bool sub_ok = v.min_residual >= -opts.tol;
  bool super_ok = v.max_residual <= opts.tol;
  add_witnesses(samples, opts.tol, true, opts.max_witnesses, v.witnesses);
  add_witnesses(samples, opts.tol, false, opts.max_witnesses, v.witnesses);

  if (c.kind() == CandidateKind::one_dimensional) {
    for (const Corner& corner : c.profile().corners()) {
      CornerOutcome co = check_corner(c, corner, opts.tol);
      if (co.subsolution == Outcome::fail) {
        sub_ok = false;
        std::optional<double> r;
        if (co.weak) r = std::min(co.two_sided[0].residual, co.two_sided[1].residual);
        v.witnesses.push_back({corner.t0, r, "subsolution", co.subsolution_rule, false});
      }
      if (co.supersolution == Outcome::fail) {
        super_ok = false;
        std::optional<double> r = co.f_value;
        if (co.weak) r = std::max(co.two_sided[0].residual, co.two_sided[1].residual);
        v.witnesses.push_back({corner.t0, r, "supersolution", co.supersolution_rule, co.derived_rule});
      }
      v.corners.push_back(std::move(co));
    }
  }

  v.subsolution = sub_ok ? Outcome::pass : Outcome::fail;
  v.supersolution = super_ok ? Outcome::pass : Outcome::fail;
  v.solution = sub_ok && super_ok ? Outcome::pass : Outcome::fail;
  return v;
}

StructureReport analyze_profile_structure(const Candidate& c, const Verdict& verdict,
                                          std::span<const double> grid) {
  std::vector<double> ts(grid.begin(), grid.end());
  for (const Corner& j : c.profile().corners()) ts.push_back(j.t0);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.empty()) throw InputError("structure analysis needs a nonempty grid");

  std::vector<double> vals(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) vals[i] = c.profile().value(ts[i]);

  StructureReport rep;
  rep.min_value = *std::min_element(vals.begin(), vals.end());
  rep.max_value = *std::max_element(vals.begin(), vals.end());

  if (rep.min_value >= -kZeroValueTol && rep.max_value <= kZeroValueTol) {
    rep.sign_pattern = "zero";
  } else if (rep.min_value > kZeroValueTol) {
    rep.sign_pattern = "positive";
  } else if (rep.min_value >= -kZeroValueTol) {
    rep.sign_pattern = "nonnegative";
  } else if (rep.max_value < -kZeroValueTol) {
    rep.sign_pattern = "negative";
  } else if (rep.max_value <= kZeroValueTol) {
    rep.sign_pattern = "nonpositive";
  } else {
    rep.sign_pattern = "sign-changing";
  }

  bool up = true;
  bool down = true;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    if (vals[i + 1] < vals[i] - kZeroValueTol) up = false;
    if (vals[i + 1] > vals[i] + kZeroValueTol) down = false;
  }
  rep.monotonicity = up && down ? Monotonicity::constant
                     : up       ? Monotonicity::nondecreasing
                     : down     ? Monotonicity::nonincreasing
                                : Monotonicity::non_monotone;

  // Longest run of (numerically) zero samples, at least two samples long.
  std::size_t best_lo = 0, best_len = 0;
  for (std::size_t i = 0; i < vals.size();) {
    if (std::abs(vals[i]) > kZeroValueTol) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < vals.size() && std::abs(vals[j]) <= kZeroValueTol) ++j;
    if (j - i > best_len) {
      best_lo = i;
      best_len = j - i;
    }
    i = j;
  }
  if (best_len >= 2) {
    rep.plateau = Plateau{ts[best_lo], ts[best_lo + best_len - 1], best_lo == 0,
                          best_lo + best_len == vals.size()};
  }

  const bool one_d = c.kind() == CandidateKind::one_dimensional;
  const bool sub_pass = verdict.subsolution == Outcome::pass;
  const bool super_pass = verdict.supersolution == Outcome::pass;

  rep.nonnegative_subsolution.name = "nonnegative-subsolution";
  if (sub_pass) {
    const bool ok = rep.min_value >= -verdict.tol;
    rep.nonnegative_subsolution.status = ok ? FlagStatus::ok : FlagStatus::violated;
    if (!ok) rep.nonnegative_subsolution.detail = "subsolution takes negative values; engine or profile bug";
  }

  rep.no_positive_supersolution.name = "no-positive-supersolution";
  if (one_d && super_pass) {
    const bool positive = rep.min_value > kZeroValueTol;
    rep.no_positive_supersolution.status = positive ? FlagStatus::violated : FlagStatus::ok;
    if (positive) {
      rep.no_positive_supersolution.detail =
          "positive one-dimensional supersolution cannot exist; engine or profile bug";
    }
  }

  rep.monotone_supersolution_plateau.name = "monotone-supersolution-plateau";
  const bool nondecreasing =
      rep.monotonicity == Monotonicity::nondecreasing || rep.monotonicity == Monotonicity::constant;
  if (one_d && super_pass && rep.min_value >= -kZeroValueTol && nondecreasing) {
    const bool ok = rep.plateau && rep.plateau->left_unbounded;
    rep.monotone_supersolution_plateau.status = ok ? FlagStatus::ok : FlagStatus::violated;
    if (!ok) {
      rep.monotone_supersolution_plateau.detail =
          "nondecreasing nonnegative supersolution without a left zero plateau";
    }
  }
  return rep;
}

}  // namespace tlap
