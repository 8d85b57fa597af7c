#include "alphaspectra/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace alphaspectra {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (auto row : rows_) twice += std::popcount(row);
    return twice / 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (auto row : rows_) d = std::max(d, std::popcount(row));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t upper = rows_[u] >> (u + 1) << (u + 1);
        while (upper) {
            int v = std::countr_zero(upper);
            out.emplace_back(u, v);
            upper &= upper - 1;
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge");
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.rows_[u] &= ~(std::uint64_t{1} << v);
    g.rows_[v] &= ~(std::uint64_t{1} << u);
    return g;
}

Graph Graph::remove_vertex(int v) const {
    check_vertex(v);
    if (n_ == 1) throw std::invalid_argument("cannot remove the only vertex");
    Graph g(n_ - 1);
    auto shift = [v](int w) { return w < v ? w : w - 1; };
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        std::uint64_t row = rows_[u] & ~(std::uint64_t{1} << v);
        while (row) {
            int w = std::countr_zero(row);
            row &= row - 1;
            if (u < w) g.add_edge_unchecked(shift(u), shift(w));
        }
    }
    return g;
}

Graph Graph::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> hit(n_, false);
    for (int v : perm) {
        if (v < 0 || v >= n_ || hit[v]) throw std::invalid_argument("not a permutation");
        hit[v] = true;
    }
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = rows_[u];
        while (row) {
            int w = std::countr_zero(row);
            row &= row - 1;
            if (u < w) g.add_edge_unchecked(perm[u], perm[w]);
        }
    }
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    std::uint64_t full = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    for (int u = 0; u < n_; ++u)
        g.rows_[u] = (~rows_[u] & full) & ~(std::uint64_t{1} << u);
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > kMaxVertices)
        throw std::invalid_argument("join exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + g.order());
    return Graph::from_edges(n, edges);
}

Graph subdivide_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("subdivide_edge: uv is not an edge");
    int n = g.order() + 1;
    if (n > kMaxVertices) throw std::invalid_argument("subdivision exceeds 64 vertices");
    auto edges = g.without_edge(u, v).edges();
    edges.emplace_back(u, n - 1);
    edges.emplace_back(n - 1, v);
    return Graph::from_edges(n, edges);
}

Graph shift_edges(const Graph& g, int v, int u, const std::vector<int>& s) {
    if (s.empty())
        throw std::invalid_argument("shift_edges: S must be nonempty");
    std::uint64_t mask = 0;
    for (int w : s) {
        if (w < 0 || w >= g.order()) throw std::out_of_range("shift_edges: vertex out of range");
        mask |= std::uint64_t{1} << w;
    }
    std::uint64_t allowed = g.neighbors(v) & ~g.neighbors(u) & ~(std::uint64_t{1} << u);
    if ((mask & ~allowed) != 0)
        throw std::invalid_argument("shift_edges: S must lie in N(v) minus (N(u) and u)");
    Graph out = g;
    for (int w : s) out = out.without_edge(v, w).with_edge(u, w);
    return out;
}

bool is_connected(const Graph& g) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    std::uint64_t full = (g.order() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
    return (seen & full) == full;
}

} // namespace alphaspectra
