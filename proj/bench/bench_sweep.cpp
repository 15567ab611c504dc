// Serial reference loop against the OpenMP kernel on the same grids.

#include <benchmark/benchmark.h>

#include "monocont/sweep.hpp"
#include "monocont/verify.hpp"

using namespace monocont;

namespace {

GridSpec lambda_grid(long steps) {
    GridSpec g{-5.0, 5.0, -5.0, 5.0, steps, steps, {}};
    g.exclusions = series_exclusions(g);
    return g;
}

Execution execution(const benchmark::State& state) {
    return state.range(1) == 0 ? Execution::serial() : Execution{0};
}

void BM_LambdaSweep(benchmark::State& state) {
    const GridSpec g = lambda_grid(state.range(0));
    const Execution exec = execution(state);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(Function::lambda, g, {}, exec));
    state.SetItemsProcessed(static_cast<long>(state.iterations() * g.size()));
    state.SetLabel(state.range(1) == 0 ? "serial" : "openmp x" + std::to_string(available_threads()));
}

void BM_ZetaSweep(benchmark::State& state) {
    GridSpec g{-10.0, 10.0, -40.0, 40.0, state.range(0), state.range(0), pole_exclusions()};
    const Execution exec = execution(state);
    for (auto _ : state) benchmark::DoNotOptimize(sweep(Function::zeta, g, {}, exec));
    state.SetItemsProcessed(static_cast<long>(state.iterations() * g.size()));
    state.SetLabel(state.range(1) == 0 ? "serial" : "openmp x" + std::to_string(available_threads()));
}

void BM_VerifyAll(benchmark::State& state) {
    VerifyOptions options;
    options.exec = execution(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_verify(Suite::all, options));
    state.SetLabel(state.range(1) == 0 ? "serial" : "openmp x" + std::to_string(available_threads()));
}

}  // namespace

BENCHMARK(BM_LambdaSweep)->ArgsProduct({{21, 41}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZetaSweep)->ArgsProduct({{41}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAll)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
