#include <doctest.h>

#include <stdexcept>

#include <random>

#include "alphaspectra/enumerate.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/graph.hpp"
#include "alphaspectra/invariants.hpp"

using namespace alphaspectra;

namespace {

// subset brute force, the independent oracle for small n
int brute_independence(const Graph& g) {
    int n = g.order(), best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if ((mask >> u) & 1u)
                if (g.neighbors(u) & mask) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

int brute_clique(const Graph& g) { return brute_independence(g.complement()); }

Graph random_graph(int n, std::mt19937_64& rng, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("independence number examples") {
    CHECK(independence_number(complete_graph(5)) == 1);
    CHECK(independence_number(path_graph(7)) == 4);
    CHECK(independence_number(cycle_graph(7)) == 3);
    CHECK(independence_number(Graph(6)) == 6);
}

TEST_CASE("independence matches subset brute force up to n=8") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 150; ++rep) {
        Graph g = random_graph(1 + rep % 8, rng, 0.15 + 0.1 * (rep % 8));
        CHECK(independence_number(g) == brute_independence(g));
    }
}

TEST_CASE("independence equals clique number of the complement") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 80; ++rep) {
        Graph g = random_graph(2 + rep % 8, rng, 0.5);
        CHECK(independence_number(g) == brute_clique(g.complement()));
    }
}

TEST_CASE("matching number examples") {
    CHECK(matching_number(path_graph(6)) == 3);
    CHECK(matching_number(star_graph(6)) == 1);
    CHECK(matching_number(complete_graph(7)) == 3);
    CHECK(matching_number(cycle_graph(9)) == 4);
    CHECK_THROWS_AS(matching_number(complete_graph(21)), std::invalid_argument);
}

TEST_CASE("trees satisfy i + mu = n up to n=12") {
    for (int n = 2; n <= 12; ++n) {
        GraphStream stream = trees(n);
        while (auto t = stream.next())
            CHECK(independence_number(*t) + matching_number(*t) == n);
    }
}

TEST_CASE("connected bipartite graphs satisfy i + mu = n (Koenig) up to n=8") {
    for (int n = 2; n <= 8; ++n) {
        GraphStream stream = connected_bipartite(n);
        while (auto g = stream.next()) {
            CHECK(independence_number(*g) >= (n + 1) / 2);
            CHECK(independence_number(*g) + matching_number(*g) == n);
        }
    }
}

TEST_CASE("independence-2 graphs have complements below the edge cap") {
    for (int n = 4; n <= 10; ++n) {
        GraphStream stream = connected_independence_two(n);
        while (auto g = stream.next()) {
            CHECK(independence_number(*g) == 2);
            CHECK(g->complement().size() <= n * n / 4 - 1);
        }
    }
}

TEST_CASE("bipartite and tree predicates") {
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(Graph(3)));
    CHECK(is_tree(t_shape(1, 2, 2)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}
