#include "alphaspectra/enumerate.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

#include "alphaspectra/canonical.hpp"
#include "alphaspectra/invariants.hpp"

namespace alphaspectra {

namespace {

// Census generation is McKay-style canonical deletion: a child produced by
// adding an edge (or a leaf) is kept only when deleting the child's
// canonically-last edge (or leaf) lands back on the parent's isomorphism
// class. Together with per-parent key dedup this emits each class once.

struct LevelItem {
    Graph g; // stored in canonical form
    CanonicalKey key;
};

std::pair<int, int> last_canonical_edge(const Graph& g, const CanonicalLabeling& lab) {
    int n = g.order();
    for (int i = n - 2; i >= 0; --i)
        for (int j = n - 1; j > i; --j)
            if (g.has_edge(lab.order[i], lab.order[j]))
                return {lab.order[i], lab.order[j]};
    throw std::logic_error("last_canonical_edge: graph has no edges");
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph apply_labeling(const Graph& g, const CanonicalLabeling& lab) {
    std::vector<int> perm(g.order());
    for (int pos = 0; pos < g.order(); ++pos) perm[lab.order[pos]] = pos;
    return g.permuted(perm);
}

// Grows graphs on a fixed vertex set edge by edge inside a hereditary class.
struct EdgeCensusEngine {
    int n;
    std::function<bool(const Graph&, int, int)> edge_ok; // cheap pre-check, may be null
    std::function<bool(const Graph&)> child_ok;          // class membership, may be null

    std::vector<LevelItem> level;
    bool exhausted = false;

    explicit EdgeCensusEngine(int order) : n(order) {
        Graph empty(n);
        level.push_back({empty, canonical_key(empty)});
    }

    void advance() {
        std::vector<LevelItem> next;
        std::vector<CanonicalKey> emitted;
        for (const auto& parent : level) {
            emitted.clear();
            std::vector<int> parent_deg = sorted_degrees(parent.g);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (parent.g.has_edge(u, v)) continue;
                    if (edge_ok && !edge_ok(parent.g, u, v)) continue;
                    Graph child = parent.g.with_edge(u, v);
                    if (child_ok && !child_ok(child)) continue;
                    CanonicalLabeling lab = canonical_labeling(child);
                    if (std::find(emitted.begin(), emitted.end(), lab.key) != emitted.end()) continue;

                    auto [cu, cv] = last_canonical_edge(child, lab);
                    bool accept;
                    if ((cu == u && cv == v) || (cu == v && cv == u)) {
                        accept = true;
                    } else {
                        Graph pcheck = child.without_edge(cu, cv);
                        accept = sorted_degrees(pcheck) == parent_deg &&
                                 canonical_key(pcheck) == parent.key;
                    }
                    if (!accept) continue;
                    emitted.push_back(lab.key);
                    next.push_back({apply_labeling(child, lab), lab.key});
                }
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const LevelItem& a, const LevelItem& b) { return a.key < b.key; });
        level = std::move(next);
        if (level.empty()) exhausted = true;
    }
};

// Grows trees by attaching a new leaf; the canonical deletion vertex is the
// leaf with the highest canonical position.
struct TreeEngine {
    int target;
    std::vector<LevelItem> level;

    explicit TreeEngine(int n) : target(n) {
        Graph k1(1);
        level.push_back({k1, canonical_key(k1)});
    }

    void advance() {
        std::vector<LevelItem> next;
        std::vector<CanonicalKey> emitted;
        int k = level.front().g.order();
        for (const auto& parent : level) {
            emitted.clear();
            for (int at = 0; at < k; ++at) {
                auto edges = parent.g.edges();
                edges.emplace_back(at, k);
                Graph child = Graph::from_edges(k + 1, edges);
                CanonicalLabeling lab = canonical_labeling(child);
                if (std::find(emitted.begin(), emitted.end(), lab.key) != emitted.end()) continue;

                int del = -1;
                for (int pos = k; pos >= 0; --pos) {
                    int v = lab.order[pos];
                    if (child.degree(v) == 1) {
                        del = v;
                        break;
                    }
                }
                bool accept = del == k || canonical_key(child.remove_vertex(del)) == parent.key;
                if (!accept) continue;
                emitted.push_back(lab.key);
                next.push_back({apply_labeling(child, lab), lab.key});
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const LevelItem& a, const LevelItem& b) { return a.key < b.key; });
        level = std::move(next);
    }
};

GraphStream make_census_stream(int n, std::function<bool(const Graph&, int, int)> edge_ok,
                               std::function<bool(const Graph&)> child_ok,
                               std::function<std::optional<Graph>(const Graph&)> emit) {
    auto engine = std::make_shared<EdgeCensusEngine>(n);
    engine->edge_ok = std::move(edge_ok);
    engine->child_ok = std::move(child_ok);
    auto pos = std::make_shared<std::size_t>(0);
    return GraphStream([engine, pos, emit = std::move(emit)]() -> std::optional<Graph> {
        for (;;) {
            if (*pos < engine->level.size()) {
                const Graph& g = engine->level[(*pos)++].g;
                if (auto out = emit(g)) return out;
                continue;
            }
            if (engine->exhausted) return std::nullopt;
            engine->advance();
            *pos = 0;
        }
    });
}

} // namespace

GraphStream connected_graphs(int n, bool long_run) {
    int cap = long_run ? kMaxCensusOrderLongRun : kMaxCensusOrder;
    if (n < 1 || n > cap)
        throw std::invalid_argument("connected_graphs: order must be in [1," + std::to_string(cap) + "]");
    return make_census_stream(n, nullptr, nullptr, [](const Graph& g) -> std::optional<Graph> {
        if (is_connected(g)) return g;
        return std::nullopt;
    });
}

GraphStream connected_bipartite(int n) {
    if (n < 1 || n > kMaxCensusOrder)
        throw std::invalid_argument("connected_bipartite: order must be in [1," +
                                    std::to_string(kMaxCensusOrder) + "]");
    return make_census_stream(
        n, nullptr, [](const Graph& g) { return is_bipartite(g); },
        [](const Graph& g) -> std::optional<Graph> {
            if (is_connected(g)) return g;
            return std::nullopt;
        });
}

GraphStream connected_independence_two(int n) {
    if (n < 1 || n > kMaxIndependenceTwoOrder)
        throw std::invalid_argument("connected_independence_two: order must be in [1," +
                                    std::to_string(kMaxIndependenceTwoOrder) + "]");
    // Grow the triangle-free complements; adding uv is admissible iff u and v
    // share no neighbour yet.
    return make_census_stream(
        n,
        [](const Graph& g, int u, int v) { return (g.neighbors(u) & g.neighbors(v)) == 0; },
        nullptr,
        [](const Graph& g) -> std::optional<Graph> {
            if (g.size() == 0) return std::nullopt; // complement would be complete, i = 1
            Graph c = g.complement();
            if (is_connected(c)) return c;
            return std::nullopt;
        });
}

GraphStream trees(int n) {
    if (n < 1 || n > kMaxTreeOrder)
        throw std::invalid_argument("trees: order must be in [1," + std::to_string(kMaxTreeOrder) + "]");
    auto engine = std::make_shared<TreeEngine>(n);
    auto pos = std::make_shared<std::size_t>(0);
    return GraphStream([engine, pos]() -> std::optional<Graph> {
        while (engine->level.front().g.order() < engine->target) {
            engine->advance();
            *pos = 0;
        }
        if (*pos < engine->level.size()) return engine->level[(*pos)++].g;
        return std::nullopt;
    });
}

} // namespace alphaspectra
