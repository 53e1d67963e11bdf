#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tlap/catalog.hpp"
#include "tlap/eigenbound.hpp"
#include "tlap/errors.hpp"
#include "tlap/expectations.hpp"
#include "tlap/fd_lab.hpp"
#include "tlap/nonlinearity.hpp"
#include "tlap/radial.hpp"
#include "tlap/reports.hpp"
#include "tlap/viscosity.hpp"

namespace {

using tlap::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Output {
  std::string format = "json";
  std::string path;  // empty: stdout
};

void add_output_flags(CLI::App* cmd, Output& out, const std::string& default_format) {
  out.format = default_format;
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Write the report here instead of stdout");
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open output file " + path);
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

// Side-channel JSON (radial diagnostics, fd metadata): a file when asked for,
// otherwise the error stream so stdout stays pure CSV.
void write_side_json(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cerr << tlap::dump(j);
    return;
  }
  write_text(tlap::dump(j), path);
}

struct Globals {
  bool serial = false;
  tlap::Exec exec() const { return serial ? tlap::Exec::serial : tlap::Exec::parallel; }
};

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string candidate;
  std::string nonlinearity = "allen-cahn";
  std::size_t n = 3;
  std::size_t k = 1;
  double tol = tlap::kDefaultVerifyTol;
  std::optional<double> t_min, t_max;
  std::optional<std::size_t> points;
  std::size_t max_witnesses = 20;
  std::string expectations;
  Output out;
};

int run_verify(const VerifyArgs& a, const Globals& g) {
  const tlap::Candidate c = tlap::make_candidate(a.candidate, a.n, a.k, a.nonlinearity);
  std::vector<double> grid = tlap::default_grid(c.kind());
  if (a.t_min || a.t_max || a.points) {
    grid = tlap::uniform_grid(a.t_min.value_or(grid.front()), a.t_max.value_or(grid.back()),
                              a.points.value_or(grid.size()));
  }
  const tlap::Verdict v =
      tlap::verify(c, grid, {.tol = a.tol, .max_witnesses = a.max_witnesses, .exec = g.exec()});
  const tlap::StructureReport s = tlap::analyze_profile_structure(c, v, grid);

  const tlap::ExpectationTable table =
      a.expectations.empty() ? tlap::bundled_expectations() : tlap::load_expectations(a.expectations);
  const tlap::Expectation* e = table.find(a.candidate, a.nonlinearity);
  const bool matched = e == nullptr || tlap::verdict_matches(v, *e);
  const bool ok = matched && s.consistent();

  if (a.out.format == "csv") {
    std::ostringstream os;
    tlap::write_witnesses_csv(os, v);
    write_text(os.str(), a.out.path);
  } else {
    Json j = tlap::verdict_to_json(v, &s);
    j["nonlinearity"] = a.nonlinearity;
    Json ej;
    ej["table"] = table.source;
    ej["version"] = table.version;
    if (e) {
      ej["entry"] = e->candidate;
      ej["role"] = e->role;
      ej["expected"] = Json{{"subsolution", tlap::to_string(e->subsolution)},
                            {"supersolution", tlap::to_string(e->supersolution)},
                            {"solution", tlap::to_string(e->solution)}};
      ej["matched"] = matched;
    } else {
      ej["entry"] = nullptr;
      ej["matched"] = nullptr;
    }
    j["expectation"] = ej;
    j["passed"] = ok;
    write_text(tlap::dump(j), a.out.path);
  }
  if (!matched) {
    std::cerr << "verify: verdict for " << a.candidate << " does not match the expectation table\n";
  }
  if (!s.consistent()) std::cerr << "verify: structure flags violated\n";
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- radial

struct RadialArgs {
  std::string nonlinearity = "allen-cahn";
  double alpha = 0.0;
  int k = 1;
  double rmax = 10.0;
  double step = tlap::kDefaultRadialStep;
  std::optional<std::size_t> n;
  std::size_t oracle_stride = 1;
  double oracle_tol = 1e-6;
  double residual_tol = 1e-8;
  bool exploratory = false;
  std::string diagnostics;
  Output out;
};

int run_radial(const RadialArgs& a, const Globals& g) {
  const tlap::Nonlinearity f = tlap::parse_nonlinearity(a.nonlinearity);
  const std::size_t n = a.n.value_or(static_cast<std::size_t>(a.k) + 1);
  if (n < 2 || static_cast<std::size_t>(a.k) > n - 1) throw UsageError("radial needs 1 <= k <= N-1");

  const tlap::RadialRun run =
      tlap::integrate_ivp(f, a.alpha, a.k, a.step, a.rmax, {.enforce_window = !a.exploratory});

  Json report = tlap::radial_diagnostics_to_json(run);
  report["exploratory"] = a.exploratory;
  bool ok = true;

  const tlap::HessianOrderReport order = tlap::check_hessian_order(run, f);
  report["hessian_order"] = Json{{"holds", order.holds},
                                 {"violations", order.violations.size()},
                                 {"min_margin", order.min_margin}};
  if (!order.violations.empty()) report["hessian_order"]["first_violation_r"] = order.violations.front();

  std::optional<tlap::OracleAgreement> oracles;
  try {
    oracles = tlap::compare_with_oracles(run, f, a.oracle_stride, g.exec());
  } catch (const tlap::DomainError& e) {
    report["oracles"] = Json{{"error", e.what()}};
    ok = false;
  }
  if (oracles) {
    Json oj{{"samples_compared", oracles->samples_compared},
            {"sup_quadrature_error", oracles->sup_quadrature_error}};
    oj["sup_closed_form_error"] =
        oracles->sup_closed_form_error ? Json(*oracles->sup_closed_form_error) : Json(nullptr);
    oj["tol"] = a.oracle_tol;
    const bool agree = oracles->sup_quadrature_error <= a.oracle_tol &&
                       (!oracles->sup_closed_form_error || *oracles->sup_closed_form_error <= a.oracle_tol);
    oj["agree"] = agree;
    report["oracles"] = oj;
    ok = ok && agree;
  }

  if (order.holds) {
    const double res = tlap::residual_of_radial(run, f, n);
    report["pde_residual"] = Json{{"N", n}, {"max_abs", res}, {"tol", a.residual_tol}};
    ok = ok && res <= a.residual_tol;
  } else {
    report["pde_residual"] = Json{{"N", n}, {"max_abs", nullptr}, {"tol", a.residual_tol}};
    ok = false;
  }
  const tlap::RadialDiagnostics& d = run.diagnostics;
  ok = ok && d.monotone_decreasing && d.positive && d.hessian_order_holds;
  // Exploratory runs are reported, never asserted.
  report["passed"] = a.exploratory ? Json(nullptr) : Json(ok);

  if (a.out.format == "csv") {
    std::ostringstream os;
    tlap::write_radial_csv(os, run);
    write_text(os.str(), a.out.path);
    write_side_json(report, a.diagnostics);
  } else {
    Json traj{{"r", Json::array()}, {"v", Json::array()}, {"vp", Json::array()}};
    for (const tlap::RadialSample& s : run.samples) {
      traj["r"].push_back(s.r);
      traj["v"].push_back(s.v);
      traj["vp"].push_back(s.vp);
    }
    Json j = report;
    j["trajectory"] = traj;
    write_text(tlap::dump(j), a.out.path);
    if (!a.diagnostics.empty()) write_text(tlap::dump(report), a.diagnostics);
  }
  if (a.exploratory) return kExitOk;
  if (!ok) std::cerr << "radial: diagnostics or oracle agreement failed\n";
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- eigenbound

struct EigenArgs {
  int n = 1;
  std::size_t grid = 200;
  std::size_t area_samples = 100000;
  double area_tol = 0.01;
  Output out;
};

int run_eigenbound(const EigenArgs& a, const Globals& g) {
  if (a.n < 1) throw UsageError("n must be >= 1");
  const tlap::EigenScanReport scan = tlap::scan_inequality(a.n, a.grid, g.exec());
  const double area = tlap::area_estimate(a.n, a.area_samples, g.exec());
  const double exact = tlap::DomainQn(a.n).exact_area();
  const double rel = std::abs(area - exact) / exact;
  const bool ok = scan.passed() && scan.all_regions_exercised() && rel <= a.area_tol;

  if (a.out.format == "csv") {
    std::ostringstream os;
    tlap::write_scan_csv(os, tlap::scan_points(a.n, a.grid));
    write_text(os.str(), a.out.path);
  } else {
    Json j;
    j["n"] = a.n;
    if (scan.passed()) {
      j["certificate"] = tlap::certificate_to_json(tlap::mu_upper_bound_report(a.n, a.grid, g.exec()));
    } else {
      j["certificate"] = nullptr;
      j["scan"] = tlap::eigen_scan_to_json(scan);
    }
    j["all_regions_exercised"] = scan.all_regions_exercised();
    j["area"] = Json{{"samples", a.area_samples},
                     {"estimate", area},
                     {"exact", exact},
                     {"relative_error", rel},
                     {"tol", a.area_tol}};
    j["passed"] = ok;
    write_text(tlap::dump(j), a.out.path);
  }
  if (!ok) std::cerr << "eigenbound: scan or area check failed for n=" << a.n << "\n";
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- fd

struct FdArgs {
  std::string boundary;
  std::string nonlinearity = "allen-cahn";
  std::vector<double> box{-2.0, 2.0};
  double h = 0.05;
  int radius = 2;
  double tau = 0.0;
  std::size_t max_iterations = 400000;
  double update_tol = 1e-10;
  double error_tol = 0.05;
  std::string meta;
  Output out;
};

int run_fd(const FdArgs& a, const Globals& g) {
  const tlap::Nonlinearity f = tlap::parse_nonlinearity(a.nonlinearity);
  const tlap::BoundaryData data = tlap::parse_boundary(a.boundary);
  const tlap::GridSpec grid{a.box[0], a.box[1], a.box[0], a.box[1], a.h};
  tlap::SolveConfig cfg;
  cfg.tau = a.tau;
  cfg.max_iterations = a.max_iterations;
  cfg.update_tol = a.update_tol;
  cfg.stencil_radius = a.radius;
  cfg.exec = g.exec();
  const tlap::SolveResult r = tlap::solve_dirichlet(f, data, grid, cfg);

  Json meta = tlap::solve_metadata_to_json(r, grid, cfg, a.nonlinearity, a.boundary);
  meta["flatness"] = Json{{"along_x", tlap::flatness_to_json(tlap::flatness_probe(r.field, tlap::Axis::y))},
                          {"along_y", tlap::flatness_to_json(tlap::flatness_probe(r.field, tlap::Axis::x))}};
  bool ok = r.converged;
  const tlap::BoundaryData exact = tlap::exact_solution_for(a.boundary);
  if (exact && a.nonlinearity == "allen-cahn") {
    const double err = tlap::interior_sup_error(r.field, exact);
    meta["manufactured"] = Json{{"interior_sup_error", err}, {"tol", a.error_tol}};
    meta["exploratory"] = false;
    ok = ok && err <= a.error_tol;
  } else {
    meta["manufactured"] = nullptr;
    meta["exploratory"] = true;
  }
  meta["passed"] = ok;

  if (a.out.format == "csv") {
    std::ostringstream os;
    tlap::write_field_csv(os, r.field);
    write_text(os.str(), a.out.path);
    write_side_json(meta, a.meta);
  } else {
    write_text(tlap::dump(meta), a.out.path);
  }
  if (!r.converged) std::cerr << "fd: pseudo-time iteration did not converge\n";
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- catalog

int run_catalog(const Output& out) {
  const auto cands = tlap::candidate_catalog();
  const auto nls = tlap::nonlinearity_catalog();
  const std::vector<tlap::CatalogEntry> boundaries{
      {"halfline-tanh-y", "boundary", "halfline tanh profile in y; exact solution known"},
      {"plain-tanh-y", "boundary", "tanh(y/sqrt2); exploratory"},
      {"tanh-shifted-y:c", "boundary", "shifted tanh profile in y; exact solution known"},
      {"zero", "boundary", "zero data; exact solution known"},
      {"constant:a", "boundary", "constant data; exploratory for a != 0"},
  };
  if (out.format == "csv") {
    std::ostringstream os;
    os << "section,pattern,kind,description\n";
    auto rows = [&os](const char* section, const std::vector<tlap::CatalogEntry>& es) {
      for (const auto& e : es) {
        os << section << ",\"" << e.pattern << "\"," << e.kind << ",\"" << e.description << "\"\n";
      }
    };
    rows("candidate", cands);
    rows("nonlinearity", nls);
    rows("boundary", boundaries);
    write_text(os.str(), out.path);
    return kExitOk;
  }
  auto to_json = [](const std::vector<tlap::CatalogEntry>& es) {
    Json arr = Json::array();
    for (const auto& e : es) arr.push_back(Json{{"pattern", e.pattern}, {"kind", e.kind}, {"description", e.description}});
    return arr;
  };
  Json j;
  j["candidates"] = to_json(cands);
  j["nonlinearities"] = to_json(nls);
  j["boundaries"] = to_json(boundaries);
  const tlap::ExpectationTable& t = tlap::bundled_expectations();
  Json ex = Json::array();
  for (const tlap::Expectation& e : t.entries) {
    ex.push_back(Json{{"candidate", e.candidate},
                      {"nonlinearity", e.nonlinearity},
                      {"solution", tlap::to_string(e.solution)},
                      {"role", e.role}});
  }
  j["expectations"] = Json{{"version", t.version}, {"entries", ex}};
  write_text(tlap::dump(j), out.path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated-Laplacian numerical laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tlap 1.0.0");
  Globals globals;
  app.add_flag("--serial", globals.serial, "Use the serial reference kernels");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Viscosity verification of a catalog candidate");
  verify->add_option("--candidate", va.candidate, "Candidate spec, e.g. halfline-tanh")->required();
  verify->add_option("--f", va.nonlinearity, "Nonlinearity spec")->capture_default_str();
  verify->add_option("-N,--N", va.n, "Ambient dimension")->capture_default_str()->check(CLI::Range(2, 64));
  verify->add_option("-k,--k", va.k, "Operator index, 1 <= k <= N-1")->capture_default_str();
  verify->add_option("--tol", va.tol, "Residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--t-min", va.t_min, "Scan window start");
  verify->add_option("--t-max", va.t_max, "Scan window end");
  verify->add_option("--points", va.points, "Scan points")->check(CLI::Range(2, 10000000));
  verify->add_option("--max-witnesses", va.max_witnesses, "Witness cap")->capture_default_str();
  verify->add_option("--expectations", va.expectations, "Expected-verdict table (default: bundled)");
  add_output_flags(verify, va.out, "json");

  RadialArgs ra;
  CLI::App* radial = app.add_subcommand("radial", "Radial IVP with quadrature and closed-form oracles");
  radial->add_option("--f", ra.nonlinearity, "Nonlinearity spec")->capture_default_str();
  radial->add_option("--alpha", ra.alpha, "Initial value v(0)")->required();
  radial->add_option("-k,--k", ra.k, "Operator index")->capture_default_str()->check(CLI::Range(1, 64));
  radial->add_option("-N,--N", ra.n, "Dimension for the PDE residual (default k+1)");
  radial->add_option("--rmax", ra.rmax, "Integration end")->capture_default_str();
  radial->add_option("--step", ra.step, "RK4 step")->capture_default_str();
  radial->add_option("--oracle-stride", ra.oracle_stride, "Compare every n-th sample")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
  radial->add_option("--oracle-tol", ra.oracle_tol, "Oracle agreement tolerance")->capture_default_str();
  radial->add_option("--residual-tol", ra.residual_tol, "PDE residual tolerance")->capture_default_str();
  radial->add_flag("--exploratory", ra.exploratory, "Allow alpha outside the window; report only");
  radial->add_option("--diagnostics", ra.diagnostics, "Diagnostics JSON path (default: stderr with CSV)");
  add_output_flags(radial, ra.out, "csv");

  EigenArgs ea;
  CLI::App* eigen = app.add_subcommand("eigenbound", "Grid certificate for the principal eigenvalue bound on Q_n");
  eigen->add_option("--n", ea.n, "Domain index n >= 1")->required()->check(CLI::PositiveNumber);
  eigen->add_option("--grid", ea.grid, "Scan resolution per axis")->capture_default_str();
  eigen->add_option("--area-samples", ea.area_samples, "Area lattice points")->capture_default_str();
  eigen->add_option("--area-tol", ea.area_tol, "Relative area tolerance")->capture_default_str();
  add_output_flags(eigen, ea.out, "json");

  FdArgs fa;
  CLI::App* fd = app.add_subcommand("fd", "Wide-stencil monotone solver on a square");
  fd->set_help_flag("--help", "Print this help message and exit");  // frees --h for the mesh width
  fd->add_option("--boundary", fa.boundary, "Boundary data spec")->required();
  fd->add_option("--f", fa.nonlinearity, "Nonlinearity spec")->capture_default_str();
  fd->add_option("--box", fa.box, "Square [lo, hi]^2")->expected(2)->capture_default_str();
  fd->add_option("--h", fa.h, "Mesh width")->capture_default_str()->check(CLI::PositiveNumber);
  fd->add_option("--radius", fa.radius, "Stencil radius")->capture_default_str()->check(CLI::Range(1, 8));
  fd->add_option("--tau", fa.tau, "Pseudo-time step (0: default)")->capture_default_str();
  fd->add_option("--max-iter", fa.max_iterations, "Sweep cap")->capture_default_str();
  fd->add_option("--update-tol", fa.update_tol, "Stop when a sweep moves less")->capture_default_str();
  fd->add_option("--error-tol", fa.error_tol, "Manufactured-solution tolerance")->capture_default_str();
  fd->add_option("--meta", fa.meta, "Metadata JSON path (default: stderr with CSV)");
  add_output_flags(fd, fa.out, "csv");

  Output ca;
  CLI::App* catalog = app.add_subcommand("catalog", "List candidates, nonlinearities and boundary data");
  add_output_flags(catalog, ca, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(va, globals);
    if (*radial) return run_radial(ra, globals);
    if (*eigen) return run_eigenbound(ea, globals);
    if (*fd) return run_fd(fa, globals);
    if (*catalog) return run_catalog(ca);
  } catch (const tlap::CatalogLookupError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tlap::InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tlap::ConstructionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
