#include <benchmark/benchmark.h>

#include "shiftrisk/capacity.hpp"
#include "shiftrisk/demand_model.hpp"
#include "shiftrisk/sweep.hpp"
#include "shiftrisk/synthetic.hpp"

using namespace shiftrisk;

namespace {

const std::vector<WinterDataset>& corpus() {
  static const auto data = [] {
    SynthSpec spec;
    spec.residual_sd = 640.0;
    spec.rng_seed = 11;
    return generate_synthetic(spec, 11);
  }();
  return data;
}

const RegressionFit& fitted() {
  static const RegressionFit f = fit_ols(build_design_matrix(corpus()));
  return f;
}

const CapacityDistribution& plain() {
  static const auto d = convolve_fleet(synthetic_fleet(60000.0, 3), 10);
  return d;
}

}  // namespace

static void BM_ConvolveFleet(benchmark::State& state) {
  const auto fleet = synthetic_fleet(60000.0, 3);
  const int step = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convolve_fleet(fleet, step));
}
BENCHMARK(BM_ConvolveFleet)->Arg(1)->Arg(10)->Arg(100);

static void BM_SmearGaussian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(smear_gaussian(plain(), 640.0));
}
BENCHMARK(BM_SmearGaussian);

static void BM_FitDemandModel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fit_ols(build_design_matrix(corpus())));
}
BENCHMARK(BM_FitDemandModel);

static void BM_WeatherSweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.kind = SweepKind::weather;
  cfg.tau_min = -21;
  cfg.tau_max = 20;
  cfg.threads = static_cast<unsigned>(state.range(0));
  const Scenario s = reference_scenarios()[3].with_year_effect(6000.0);
  for (auto _ : state) benchmark::DoNotOptimize(shift_sweep(s, fitted(), corpus(), plain(), cfg));
}
BENCHMARK(BM_WeatherSweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
