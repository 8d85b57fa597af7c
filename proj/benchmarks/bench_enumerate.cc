#include <benchmark/benchmark.h>

#include "alphaspectra/enumerate.hpp"

namespace as = alphaspectra;

static void BM_ConnectedCensus(benchmark::State& state) {
    for (auto _ : state) {
        auto graphs = as::connected_graphs(static_cast<int>(state.range(0))).drain();
        benchmark::DoNotOptimize(graphs.size());
    }
}
BENCHMARK(BM_ConnectedCensus)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_TreeCensus(benchmark::State& state) {
    for (auto _ : state) {
        auto graphs = as::trees(static_cast<int>(state.range(0))).drain();
        benchmark::DoNotOptimize(graphs.size());
    }
}
BENCHMARK(BM_TreeCensus)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_IndependenceTwoCensus(benchmark::State& state) {
    for (auto _ : state) {
        auto graphs = as::connected_independence_two(static_cast<int>(state.range(0))).drain();
        benchmark::DoNotOptimize(graphs.size());
    }
}
BENCHMARK(BM_IndependenceTwoCensus)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
