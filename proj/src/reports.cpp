#include "tlap/reports.hpp"

#include <ostream>

#include "format.hpp"
#include "tlap/errors.hpp"

namespace tlap {

namespace {

// Non-finite doubles become null in JSON; keep them visible as strings instead.
Json number(double v) {
  if (std::isfinite(v)) return Json(v);
  return Json(detail::format_number(v));
}

std::string csv_number(double v) { return detail::format_number(v); }

}  // namespace

Json matrix_to_json(const SymmetricMatrix& m) {
  Json j;
  j["dim"] = m.dim();
  j["upper"] = Json::array();
  for (double v : m.upper()) j["upper"].push_back(v);
  return j;
}

SymmetricMatrix matrix_from_json(const Json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    return SymmetricMatrix(dim, j.at("upper").get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed matrix JSON: ") + e.what());
  }
}

Json structure_to_json(const StructureReport& s) {
  Json j;
  j["min"] = number(s.min_value);
  j["max"] = number(s.max_value);
  j["sign"] = s.sign_pattern;
  j["monotonicity"] = to_string(s.monotonicity);
  if (s.plateau) {
    j["plateau"] = Json{{"lo", s.plateau->left_unbounded ? Json("-inf") : Json(s.plateau->lo)},
                        {"hi", s.plateau->right_unbounded ? Json("+inf") : Json(s.plateau->hi)},
                        {"scan_lo", s.plateau->lo},
                        {"scan_hi", s.plateau->hi}};
  } else {
    j["plateau"] = nullptr;
  }
  Json flags = Json::array();
  for (const ConsistencyFlag* f :
       {&s.nonnegative_subsolution, &s.no_positive_supersolution, &s.monotone_supersolution_plateau}) {
    Json fj{{"name", f->name}, {"status", to_string(f->status)}};
    if (!f->detail.empty()) fj["detail"] = f->detail;
    flags.push_back(fj);
  }
  j["flags"] = flags;
  j["consistent"] = s.consistent();
  return j;
}

Json verdict_to_json(const Verdict& v, const StructureReport* structure) {
  Json j;
  j["candidate"] = v.candidate;
  j["kind"] = v.kind;
  j["N"] = v.n;
  j["k"] = v.k;
  j["tol"] = v.tol;
  j["subsolution"] = to_string(v.subsolution);
  j["supersolution"] = to_string(v.supersolution);
  j["solution"] = to_string(v.solution);
  j["smooth_samples"] = v.smooth_samples;
  j["min_residual"] = number(v.min_residual);
  j["max_residual"] = number(v.max_residual);
  Json w = Json::array();
  for (const Witness& x : v.witnesses) {
    Json wj{{"t", x.t}};
    wj["residual"] = x.residual ? number(*x.residual) : Json(nullptr);
    wj["rule"] = x.rule;
    wj["check"] = x.check;
    if (x.derived_rule) wj["derived_rule"] = true;
    w.push_back(wj);
  }
  j["witnesses"] = w;
  Json corners = Json::array();
  for (const CornerOutcome& c : v.corners) {
    Json cj{{"t0", c.corner.t0},
            {"value", c.corner.value},
            {"slope_left", c.corner.slope_left},
            {"slope_right", c.corner.slope_right},
            {"type", c.weak ? "weak" : (c.corner.is_convex() ? "convex" : "concave")},
            {"subsolution", to_string(c.subsolution)},
            {"subsolution_rule", c.subsolution_rule},
            {"supersolution", to_string(c.supersolution)},
            {"supersolution_rule", c.supersolution_rule},
            {"f_value", number(c.f_value)}};
    if (c.derived_rule) cj["derived_rule"] = true;
    corners.push_back(cj);
  }
  j["corners"] = corners;
  if (structure) j["structure"] = structure_to_json(*structure);
  return j;
}

Json radial_diagnostics_to_json(const RadialRun& run) {
  Json j;
  j["nonlinearity"] = run.nonlinearity;
  j["alpha"] = run.alpha;
  j["k"] = run.k;
  j["step"] = run.step;
  j["rmax"] = run.rmax;
  j["samples"] = run.samples.size();
  j["diagnostics"] = Json{{"monotone_decreasing", run.diagnostics.monotone_decreasing},
                          {"positive", run.diagnostics.positive},
                          {"hessian_order_holds", run.diagnostics.hessian_order_holds},
                          {"tail_below", number(run.diagnostics.tail_below)}};
  return j;
}

Json eigen_scan_to_json(const EigenScanReport& r) {
  Json j;
  j["n"] = r.n;
  j["grid"] = r.grid;
  j["interior_points"] = r.interior_points;
  j["max_residual"] = number(r.max_residual);
  j["max_w"] = number(r.max_w);
  j["max_boundary_abs_w"] = number(r.max_boundary_abs_w);
  j["regions"] = Json{{"A", r.count_a}, {"B", r.count_b}, {"C", r.count_c}, {"both", r.count_both}};
  j["chain_failures"] = r.chain_failures;
  j["estimated_area"] = r.estimated_area;
  j["bounding_box"] = Json{{"x", {r.box_x_min, r.box_x_max}}, {"y", {r.box_y_min, r.box_y_max}}};
  Json f = Json::array();
  for (const ScanWitness& w : r.failures) {
    f.push_back(Json{{"x", w.x}, {"y", w.y}, {"residual", number(w.residual)}, {"reason", w.reason}});
  }
  j["failures"] = f;
  j["passed"] = r.passed();
  return j;
}

Json certificate_to_json(const MuCertificate& c) {
  Json j;
  j["n"] = c.n;
  j["mu1_upper_bound"] = c.bound;
  j["kind"] = c.kind;
  j["statement"] = c.statement;
  j["scan"] = eigen_scan_to_json(c.scan);
  return j;
}

Json flatness_to_json(const FlatnessStats& s) {
  return Json{{"sup_oscillation", number(s.sup_oscillation)},
              {"mean_oscillation", number(s.mean_oscillation)}};
}

Json solve_metadata_to_json(const SolveResult& r, const GridSpec& grid, const SolveConfig& cfg,
                            const std::string& nonlinearity, const std::string& boundary) {
  Json j;
  j["nonlinearity"] = nonlinearity;
  j["boundary"] = boundary;
  j["grid"] = Json{{"x", {grid.x_lo, grid.x_hi}},
                   {"y", {grid.y_lo, grid.y_hi}},
                   {"h", grid.h},
                   {"nx", r.field.nx()},
                   {"ny", r.field.ny()}};
  j["config"] = Json{{"tau", r.tau},
                     {"max_iterations", cfg.max_iterations},
                     {"update_tol", cfg.update_tol},
                     {"stencil_radius", cfg.stencil_radius},
                     {"directions", r.field.stencil().size()}};
  j["iterations"] = r.iterations;
  j["final_update"] = number(r.final_update);
  j["converged"] = r.converged;
  j["fixed_point_residual"] = number(r.max_fixed_point_residual);
  return j;
}

void write_radial_csv(std::ostream& os, const RadialRun& run) {
  os << "r,v,vp\n";
  for (const RadialSample& s : run.samples) {
    os << csv_number(s.r) << ',' << csv_number(s.v) << ',' << csv_number(s.vp) << '\n';
  }
}

void write_field_csv(std::ostream& os, const GridField2D& field) {
  os << "x,y,u\n";
  for (std::size_t j = 0; j < field.ny(); ++j) {
    for (std::size_t i = 0; i < field.nx(); ++i) {
      os << csv_number(field.x(i)) << ',' << csv_number(field.y(j)) << ','
         << csv_number(field.at(i, j)) << '\n';
    }
  }
}

void write_scan_csv(std::ostream& os, const std::vector<ScanPoint>& points) {
  os << "x,y,w,residual,region\n";
  for (const ScanPoint& p : points) {
    os << csv_number(p.x) << ',' << csv_number(p.y) << ',' << csv_number(p.w) << ','
       << csv_number(p.residual) << ',' << to_string(p.region) << '\n';
  }
}

void write_witnesses_csv(std::ostream& os, const Verdict& v) {
  os << "t,residual,check,rule\n";
  for (const Witness& w : v.witnesses) {
    os << csv_number(w.t) << ',' << (w.residual ? csv_number(*w.residual) : std::string()) << ','
       << w.check << ',' << w.rule << '\n';
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tlap
