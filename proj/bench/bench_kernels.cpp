// Serial reference kernels against their OpenMP versions on one grid.
#include <benchmark/benchmark.h>

#include "lzlab/exact_solver.hpp"
#include "lzlab/kernels.hpp"

namespace {

using namespace lzlab;

const Params& params() {
  static const Params p = make_params(4.0, -20.0, 20.0, 1e-3);
  return p;
}

const std::vector<double>& grid() {
  static const std::vector<double> g = make_grid(params());
  return g;
}

const Trajectory& trajectory() {
  static const Trajectory t = integrate_coupled(params(), default_options(params()));
  return t;
}

const std::vector<PolarSample>& polar() {
  static const std::vector<PolarSample> p = kernels::serial::polar_pointwise(trajectory().samples, 4.0);
  return p;
}

template <auto Fn>
void eta(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Fn(grid(), 4.0, 1e-11));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid().size()));
}

template <auto Fn>
void polar_map(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Fn(trajectory().samples, 4.0));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid().size()));
}

template <auto Fn>
void residuals(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Fn(polar(), 4.0));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(grid().size()));
}

}  // namespace

BENCHMARK(eta<kernels::serial::eta_on_grid>)->Name("eta_on_grid/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(eta<kernels::parallel::eta_on_grid>)->Name("eta_on_grid/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(polar_map<kernels::serial::polar_pointwise>)->Name("polar_pointwise/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(polar_map<kernels::parallel::polar_pointwise>)->Name("polar_pointwise/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(residuals<kernels::serial::nonlinear_phase_residuals>)->Name("nonlinear_residuals/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(residuals<kernels::parallel::nonlinear_phase_residuals>)->Name("nonlinear_residuals/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
