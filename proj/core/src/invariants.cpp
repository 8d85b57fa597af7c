#include "alphaspectra/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace alphaspectra {

namespace {

// Max clique with greedy-colouring bound (run on the complement to get the
// independence number). Bit-row candidate sets keep the inner loop branch-free.
struct CliqueSolver {
    int n = 0;
    std::array<std::uint64_t, kMaxVertices> adj{};
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        int order[kMaxVertices];
        int color[kMaxVertices];
        int cnt = 0;
        std::uint64_t uncolored = cand;
        int c = 0;
        while (uncolored) {
            ++c;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~adj[v];
                avail &= ~(std::uint64_t{1} << v);
                uncolored &= ~(std::uint64_t{1} << v);
                order[cnt] = v;
                color[cnt] = c;
                ++cnt;
            }
        }
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + color[i] <= best) return;
            int v = order[i];
            cand &= ~(std::uint64_t{1} << v);
            expand(cand & adj[v], size + 1);
        }
    }
};

int matching_rec(std::uint64_t mask, const std::uint64_t* rows, std::vector<std::int8_t>& memo) {
    if (!mask) return 0;
    std::int8_t& slot = memo[mask];
    if (slot >= 0) return slot;
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
    std::uint64_t nb = rows[v] & mask;
    int r = matching_rec(rest, rows, memo);
    while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        r = std::max(r, 1 + matching_rec(rest & ~(std::uint64_t{1} << u), rows, memo));
    }
    slot = static_cast<std::int8_t>(r);
    return r;
}

} // namespace

int independence_number(const Graph& g) {
    Graph c = g.complement();
    CliqueSolver solver;
    solver.n = g.order();
    for (int v = 0; v < g.order(); ++v) solver.adj[v] = c.neighbors(v);
    std::uint64_t all = (g.order() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.order()) - 1);
    solver.expand(all, 0);
    return solver.best;
}

int matching_number(const Graph& g) {
    int n = g.order();
    if (n > kMaxMatchingVertices)
        throw std::invalid_argument("matching_number supports order <= " +
                                    std::to_string(kMaxMatchingVertices) + ", got " + std::to_string(n));
    std::uint64_t rows[kMaxVertices];
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    std::vector<std::int8_t> memo(std::uint64_t{1} << n, -1);
    return matching_rec((std::uint64_t{1} << n) - 1, rows, memo);
}

bool is_bipartite(const Graph& g) {
    int n = g.order();
    std::array<std::int8_t, kMaxVertices> color;
    color.fill(-1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors(u);
            while (nb) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[v] < 0) {
                    color[v] = static_cast<std::int8_t>(1 - color[u]);
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

} // namespace alphaspectra
