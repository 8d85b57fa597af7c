#include <benchmark/benchmark.h>

#include <random>

#include "alphaspectra/families.hpp"
#include "alphaspectra/graph.hpp"
#include "alphaspectra/partition.hpp"
#include "alphaspectra/spectral.hpp"

namespace as = alphaspectra;

namespace {

as::Graph random_connected(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 40) edges.emplace_back(u, v);
        as::Graph g = as::Graph::from_edges(n, edges);
        if (as::is_connected(g)) return g;
    }
}

} // namespace

static void BM_AlphaIndex(benchmark::State& state) {
    as::Graph g = random_connected(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(as::alpha_index(g, 0.3));
}
BENCHMARK(BM_AlphaIndex)->Arg(9)->Arg(11)->Arg(16)->Arg(32)->Arg(64);

static void BM_SpectralRadiusWithPerron(benchmark::State& state) {
    as::Graph g = random_connected(static_cast<int>(state.range(0)), 43);
    for (auto _ : state) benchmark::DoNotOptimize(as::spectral_radius(g, 0.3).lambda);
}
BENCHMARK(BM_SpectralRadiusWithPerron)->Arg(9)->Arg(16)->Arg(32);

static void BM_QuotientEigenvalue(benchmark::State& state) {
    as::Graph g = as::h_family(3, 5, 2, 5);
    as::Partition pi = as::coarsest_equitable(g, as::trivial_partition(g.order()));
    as::QuotientMatrix q = as::quotient_matrix(g, 0.6, pi);
    for (auto _ : state) benchmark::DoNotOptimize(as::largest_eigenvalue_of_quotient(q));
}
BENCHMARK(BM_QuotientEigenvalue);

static void BM_CoarsestEquitable(benchmark::State& state) {
    as::Graph g = random_connected(static_cast<int>(state.range(0)), 44);
    for (auto _ : state)
        benchmark::DoNotOptimize(as::coarsest_equitable(g, as::trivial_partition(g.order())).size());
}
BENCHMARK(BM_CoarsestEquitable)->Arg(9)->Arg(16)->Arg(32);
