#include <benchmark/benchmark.h>

#include <random>

#include "alphaspectra/canonical.hpp"
#include "alphaspectra/graph.hpp"
#include "alphaspectra/invariants.hpp"

namespace as = alphaspectra;

namespace {

as::Graph random_graph(int n, std::uint64_t seed, int percent) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
    return as::Graph::from_edges(n, edges);
}

} // namespace

static void BM_IndependenceNumber(benchmark::State& state) {
    as::Graph g = random_graph(static_cast<int>(state.range(0)), 7, 50);
    for (auto _ : state) benchmark::DoNotOptimize(as::independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(9)->Arg(12)->Arg(16)->Arg(20);

static void BM_MatchingNumber(benchmark::State& state) {
    as::Graph g = random_graph(static_cast<int>(state.range(0)), 9, 40);
    for (auto _ : state) benchmark::DoNotOptimize(as::matching_number(g));
}
BENCHMARK(BM_MatchingNumber)->Arg(10)->Arg(14);

static void BM_CanonicalKey(benchmark::State& state) {
    as::Graph g = random_graph(static_cast<int>(state.range(0)), 11, 45);
    for (auto _ : state) benchmark::DoNotOptimize(as::canonical_key(g).bits[0]);
}
BENCHMARK(BM_CanonicalKey)->Arg(9)->Arg(11)->Arg(14);

static void BM_CanonicalKeySymmetric(benchmark::State& state) {
    // worst-case symmetry: the empty graph relies entirely on orbit pruning
    as::Graph g(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(as::canonical_key(g).bits[0]);
}
BENCHMARK(BM_CanonicalKeySymmetric)->Arg(12)->Arg(16);
