// Serial reference path against the OpenMP path for each parallel kernel.
// Arg 0 selects serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "egc/approximants.hpp"
#include "egc/quadrature.hpp"
#include "egc/verify.hpp"

using namespace egc;

namespace {

Execution policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial"
                                     : "parallel x" + std::to_string(max_threads()));
}

void BM_Quadrature(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(1)));
  const auto f = WeightedIntegrand::power_log(BigRat(-2, 3), BigRat(1, 2));
  quad_semi_infinite(f, ctx);  // warm the node cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad_semi_infinite(f, ctx, policy_of(state)));
  }
  label(state);
}
BENCHMARK(BM_Quadrature)
    ->ArgsProduct({{0, 1}, {30, 100, 300}})
    ->Unit(benchmark::kMillisecond);

void BM_ApproxTable(benchmark::State& state) {
  const PrecisionContext ctx(50);
  const auto cor = state.range(1) == 1 ? Corollary::kFirst : Corollary::kSecond;
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_table(cor, 1, 120, ctx, policy_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ApproxTable)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);

void BM_ExactGrids(benchmark::State& state) {
  for (auto _ : state) {
    const Execution p = policy_of(state);
    benchmark::DoNotOptimize(bin_formula_grid(12, 3, default_epsilons(), p));
    benchmark::DoNotOptimize(binformula2_grid(20, p));
    benchmark::DoNotOptimize(gauss_grid(15, p));
  }
  label(state);
}
BENCHMARK(BM_ExactGrids)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RecurrenceGrid(benchmark::State& state) {
  const PrecisionContext ctx(30);
  for (auto _ : state) {
    benchmark::DoNotOptimize(recurrence_grid(ctx, 3, policy_of(state)));
  }
  label(state);
}
BENCHMARK(BM_RecurrenceGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
