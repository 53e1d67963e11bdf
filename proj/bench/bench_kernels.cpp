// Serial reference vs OpenMP path for the grid-parallel kernels.

#include <benchmark/benchmark.h>

#include "tlap/catalog.hpp"
#include "tlap/eigenbound.hpp"
#include "tlap/fd_lab.hpp"
#include "tlap/nonlinearity.hpp"
#include "tlap/radial.hpp"
#include "tlap/viscosity.hpp"

namespace {

tlap::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? tlap::Exec::serial : tlap::Exec::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_ResidualScan(benchmark::State& state) {
  const tlap::Candidate c = tlap::make_candidate("halfline-tanh", 5, 2);
  const std::vector<double> grid = tlap::uniform_grid(-20.0, 20.0, 400000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tlap::scan_smooth_residuals(c, grid, exec_of(state)));
  }
  label(state);
}

void BM_EigenScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tlap::scan_inequality(5, 400, exec_of(state)));
  }
  label(state);
}

void BM_AreaEstimate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(tlap::area_estimate(5, 1000000, exec_of(state)));
  }
  label(state);
}

void BM_FdSolve(benchmark::State& state) {
  const tlap::Nonlinearity f = tlap::make_allen_cahn();
  const tlap::BoundaryData g = tlap::parse_boundary("halfline-tanh-y");
  tlap::SolveConfig cfg;
  cfg.exec = exec_of(state);
  cfg.max_iterations = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tlap::solve_dirichlet(f, g, tlap::GridSpec{-2, 2, -2, 2, 0.025}, cfg));
  }
  label(state);
}

void BM_RadialOracles(benchmark::State& state) {
  const tlap::Nonlinearity f = tlap::make_allen_cahn();
  const tlap::RadialRun run = tlap::integrate_ivp(f, 0.5, 1, 1e-3, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tlap::compare_with_oracles(run, f, 10, exec_of(state)));
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_ResidualScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EigenScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AreaEstimate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FdSolve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RadialOracles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
