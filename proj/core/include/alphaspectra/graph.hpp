#ifndef ALPHASPECTRA_GRAPH_HPP
#define ALPHASPECTRA_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace alphaspectra {

inline constexpr int kMaxVertices = 64;

// Simple undirected loopless graph on up to 64 vertices. Adjacency rows are
// 64-bit masks, so edges are sets by construction and every structural query
// is a handful of word ops. Instances are immutable; the "mutators" below
// return fresh values.
class Graph {
public:
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;

    bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return rows_[v]; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    int max_degree() const;

    std::vector<std::pair<int, int>> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph remove_vertex(int v) const;

    // Relabel: vertex v of *this becomes perm[v] of the result.
    Graph permuted(const std::vector<int>& perm) const;

    Graph complement() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    std::vector<std::uint64_t> rows_;

    void add_edge_unchecked(int u, int v);
    void check_vertex(int v) const;
};

// Disjoint union of g and h plus all cross edges (vertices of h are shifted
// by g.order()).
Graph join(const Graph& g, const Graph& h);

// Replace edge uv by a path u-w-v through a new vertex w (index n).
Graph subdivide_edge(const Graph& g, int u, int v);

// Rehang edges: every w in s loses its edge to v and gains one to u.
// Requires s nonempty and s a subset of N(v) \ (N(u) u {u}).
Graph shift_edges(const Graph& g, int v, int u, const std::vector<int>& s);

bool is_connected(const Graph& g);

} // namespace alphaspectra

#endif
