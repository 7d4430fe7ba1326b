#include <benchmark/benchmark.h>

#include "tecsim/airframe.hpp"
#include "tecsim/config.hpp"
#include "tecsim/dryden.hpp"
#include "tecsim/leso.hpp"
#include "tecsim/scenario.hpp"

namespace {

using namespace tecsim;

void BM_StateDerivative(benchmark::State& state) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  const AircraftState x = trim.state();
  const ControlInputs u = trim.inputs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(state_derivative(x, u, Wind{}, params));
  }
}
BENCHMARK(BM_StateDerivative);

void BM_Rk4Step(benchmark::State& state) {
  const AirframeParams params = AirframeParams::aerosonde();
  const TrimPoint trim = trim_level_flight(35.0, 100.0, params);
  AircraftState x = trim.state();
  const ControlInputs u = trim.inputs();
  for (auto _ : state) {
    x = step_rk4(x, u, Wind{}, 0.01, params);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Rk4Step);

void BM_Trim(benchmark::State& state) {
  const AirframeParams params = AirframeParams::aerosonde();
  for (auto _ : state) {
    benchmark::DoNotOptimize(trim_level_flight(35.0, 100.0, params));
  }
}
BENCHMARK(BM_Trim);

void BM_DrydenStep(benchmark::State& state) {
  DrydenGenerator gen(DrydenParams{}, 0.01, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen.step());
  }
}
BENCHMARK(BM_DrydenStep);

void BM_LesoUpdate(benchmark::State& state) {
  LesoConfig config;
  config.order = static_cast<int>(state.range(0));
  Leso leso(config);
  double y = 0.0;
  for (auto _ : state) {
    leso.update(0.0, y);
    y += 1e-6;
  }
}
BENCHMARK(BM_LesoUpdate)->Arg(1)->Arg(2)->Arg(4);

void BM_Scenario(benchmark::State& state) {
  RunConfig config = default_run_config();
  config.scenario.kind = ScenarioKind::altitude_step;
  config.scenario.step = 10.0;
  config.scenario.controller = state.range(0) ? ControllerKind::ladrc_tec : ControllerKind::tec_classic;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_scenario(config));
  }
  state.SetItemsProcessed(state.iterations() * 3001);
}
BENCHMARK(BM_Scenario)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
