#ifndef ALPHASPECTRA_ENUMERATE_HPP
#define ALPHASPECTRA_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

inline constexpr int kMaxCensusOrder = 9;
inline constexpr int kMaxCensusOrderLongRun = 10;
inline constexpr int kMaxTreeOrder = 14;
inline constexpr int kMaxIndependenceTwoOrder = 12;

// Pull-based stream of pairwise non-isomorphic graphs. Graphs arrive level
// by level (edge count for the censuses, order for trees), canonical-key
// ascending within a level, so runs are deterministic and shardable.
class GraphStream {
public:
    using Producer = std::function<std::optional<Graph>()>;

    explicit GraphStream(Producer produce) : produce_(std::move(produce)) {}

    std::optional<Graph> next() { return produce_(); }

    std::vector<Graph> drain() {
        std::vector<Graph> out;
        while (auto g = next()) out.push_back(std::move(*g));
        return out;
    }

private:
    Producer produce_;
};

// One representative per isomorphism class of connected graphs on n vertices.
// The full n = 10 census (11.7M classes) is gated behind long_run.
GraphStream connected_graphs(int n, bool long_run = false);

// One representative per isomorphism class of trees on n vertices.
GraphStream trees(int n);

// Connected bipartite graphs, one per class.
GraphStream connected_bipartite(int n);

// Connected graphs with independence number exactly 2, generated as
// complements of triangle-free graphs with at least one edge.
GraphStream connected_independence_two(int n);

} // namespace alphaspectra

#endif
