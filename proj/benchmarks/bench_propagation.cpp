#include <benchmark/benchmark.h>

#include "qcarnot/cycle.hpp"
#include "qcarnot/driving.hpp"

namespace {

static void BM_PropagateFixedSteps(benchmark::State& state) {
  const auto schedule = qcarnot::HamiltonianSchedule::compression(3.6, 1.44, 1.0);
  const auto rho0 = qcarnot::gibbs_state(schedule.start_hamiltonian(), 16.5);
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto rho = qcarnot::propagate(schedule, rho0, steps);
    benchmark::DoNotOptimize(rho);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PropagateFixedSteps)->RangeMultiplier(4)->Range(256, 256 << 10)->Complexity();

static void BM_PropagateConverged(benchmark::State& state) {
  const double tau = static_cast<double>(state.range(0)) / 1000.0;
  const auto schedule = qcarnot::HamiltonianSchedule::compression(3.6, 1.44, tau);
  const auto rho0 = qcarnot::gibbs_state(schedule.start_hamiltonian(), 16.5);
  std::uint64_t steps = 0;
  for (auto _ : state) {
    auto res = qcarnot::propagate_converged(schedule, rho0);
    steps = res.steps_used;
    benchmark::DoNotOptimize(res);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
// tau in microseconds
BENCHMARK(BM_PropagateConverged)->Arg(10)->Arg(100)->Arg(1000)->Arg(10000)
    ->Unit(benchmark::kMillisecond);

static void BM_RunCycle(benchmark::State& state) {
  qcarnot::CycleParams p;
  p.tau = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    auto report = qcarnot::run_cycle(p);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_RunCycle)->Arg(100)->Arg(220)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
