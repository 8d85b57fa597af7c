#include "alphaspectra/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace alphaspectra {

namespace {

using Bits = std::array<std::uint64_t, 2>;

// Individualization-refinement search for the minimum adjacency bit string.
// Automorphisms discovered at equal leaves prune same-orbit siblings, which
// keeps highly symmetric graphs (stars, cycles, cliques) polynomial.
struct Labeler {
    const Graph& g;
    int n;

    Bits best{};
    bool have_best = false;
    std::array<int, kMaxCanonicalVertices> best_order{};

    std::vector<std::array<std::int8_t, kMaxCanonicalVertices>> autos;
    static constexpr std::size_t kMaxAutos = 96;
    std::vector<int> base; // individualized vertices on the current path

    // Ordered partition as flat vertex list plus cell boundaries.
    struct Cells {
        std::array<std::int8_t, kMaxCanonicalVertices> vert{};  // position -> vertex
        std::array<std::int8_t, kMaxCanonicalVertices> start{}; // cell -> first position
        std::array<std::int8_t, kMaxCanonicalVertices> len{};   // cell -> size
        int ncells = 0;
    };

    explicit Labeler(const Graph& graph) : g(graph), n(graph.order()) {}

    void refine(Cells& c) const {
        for (;;) {
            std::uint64_t cell_mask[kMaxCanonicalVertices];
            for (int ci = 0; ci < c.ncells; ++ci) {
                std::uint64_t m = 0;
                for (int p = c.start[ci]; p < c.start[ci] + c.len[ci]; ++p)
                    m |= std::uint64_t{1} << c.vert[p];
                cell_mask[ci] = m;
            }

            Cells next;
            bool split = false;
            for (int ci = 0; ci < c.ncells; ++ci) {
                int sz = c.len[ci];
                if (sz == 1) {
                    int nc = next.ncells++;
                    next.start[nc] = static_cast<std::int8_t>(nc == 0 ? 0 : next.start[nc - 1] + next.len[nc - 1]);
                    next.len[nc] = 1;
                    next.vert[next.start[nc]] = c.vert[c.start[ci]];
                    continue;
                }
                // signature per member: neighbour counts into every current cell
                struct Entry {
                    std::array<std::int8_t, kMaxCanonicalVertices> counts;
                    std::int8_t v;
                };
                std::array<Entry, kMaxCanonicalVertices> ent;
                for (int k = 0; k < sz; ++k) {
                    int v = c.vert[c.start[ci] + k];
                    ent[k].v = static_cast<std::int8_t>(v);
                    for (int cj = 0; cj < c.ncells; ++cj)
                        ent[k].counts[cj] =
                            static_cast<std::int8_t>(std::popcount(g.neighbors(v) & cell_mask[cj]));
                    for (int cj = c.ncells; cj < kMaxCanonicalVertices; ++cj) ent[k].counts[cj] = 0;
                }
                std::stable_sort(ent.begin(), ent.begin() + sz,
                                 [&](const Entry& a, const Entry& b) { return a.counts < b.counts; });
                int k = 0;
                while (k < sz) {
                    int j = k;
                    while (j < sz && ent[j].counts == ent[k].counts) ++j;
                    int nc = next.ncells++;
                    next.start[nc] = static_cast<std::int8_t>(nc == 0 ? 0 : next.start[nc - 1] + next.len[nc - 1]);
                    next.len[nc] = static_cast<std::int8_t>(j - k);
                    for (int p = k; p < j; ++p) next.vert[next.start[nc] + (p - k)] = ent[p].v;
                    if (j - k < sz) split = true;
                    k = j;
                }
            }
            c = next;
            if (!split) return;
        }
    }

    void leaf(const Cells& c) {
        Bits bits{};
        int bitpos = 0;
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = g.neighbors(c.vert[i]);
            for (int j = i + 1; j < n; ++j, ++bitpos)
                if ((row >> c.vert[j]) & 1u)
                    bits[bitpos >> 6] |= std::uint64_t{1} << (63 - (bitpos & 63));
        }
        if (!have_best || bits < best) {
            best = bits;
            have_best = true;
            for (int i = 0; i < n; ++i) best_order[i] = c.vert[i];
        } else if (bits == best) {
            std::array<std::int8_t, kMaxCanonicalVertices> a{};
            bool identity = true;
            for (int p = 0; p < n; ++p) {
                a[best_order[p]] = c.vert[p];
                if (best_order[p] != c.vert[p]) identity = false;
            }
            if (!identity && autos.size() < kMaxAutos) autos.push_back(a);
        }
    }

    bool same_orbit(int v, const std::vector<int>& tried) const {
        if (tried.empty() || autos.empty()) return false;
        std::array<std::int8_t, kMaxCanonicalVertices> uf;
        for (int i = 0; i < n; ++i) uf[i] = static_cast<std::int8_t>(i);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& a : autos) {
            bool fixes_base = true;
            for (int b : base)
                if (a[b] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int x = 0; x < n; ++x) {
                int ra = find(x), rb = find(a[x]);
                if (ra != rb) uf[std::max(ra, rb)] = static_cast<std::int8_t>(std::min(ra, rb));
            }
        }
        int rv = find(v);
        for (int u : tried)
            if (find(u) == rv) return true;
        return false;
    }

    void search(Cells c) {
        refine(c);
        int target = -1;
        for (int ci = 0; ci < c.ncells; ++ci)
            if (c.len[ci] > 1) {
                target = ci;
                break;
            }
        if (target < 0) {
            leaf(c);
            return;
        }
        std::vector<int> tried;
        for (int k = 0; k < c.len[target]; ++k) {
            int v = c.vert[c.start[target] + k];
            if (same_orbit(v, tried)) continue;
            tried.push_back(v);

            Cells child;
            child.ncells = 0;
            for (int ci = 0; ci < c.ncells; ++ci) {
                if (ci != target) {
                    int nc = child.ncells++;
                    child.start[nc] = static_cast<std::int8_t>(nc == 0 ? 0 : child.start[nc - 1] + child.len[nc - 1]);
                    child.len[nc] = c.len[ci];
                    for (int p = 0; p < c.len[ci]; ++p) child.vert[child.start[nc] + p] = c.vert[c.start[ci] + p];
                } else {
                    int nc = child.ncells++;
                    child.start[nc] = static_cast<std::int8_t>(nc == 0 ? 0 : child.start[nc - 1] + child.len[nc - 1]);
                    child.len[nc] = 1;
                    child.vert[child.start[nc]] = static_cast<std::int8_t>(v);
                    nc = child.ncells++;
                    child.start[nc] = static_cast<std::int8_t>(child.start[nc - 1] + 1);
                    child.len[nc] = static_cast<std::int8_t>(c.len[target] - 1);
                    int q = 0;
                    for (int p = 0; p < c.len[target]; ++p) {
                        int w = c.vert[c.start[target] + p];
                        if (w != v) child.vert[child.start[nc] + q++] = static_cast<std::int8_t>(w);
                    }
                }
            }
            base.push_back(v);
            search(child);
            base.pop_back();
        }
    }

    CanonicalLabeling run() {
        Cells root;
        // initial cells: vertices grouped by degree, ascending
        std::array<std::int8_t, kMaxCanonicalVertices> vs{};
        std::iota(vs.begin(), vs.begin() + n, static_cast<std::int8_t>(0));
        std::stable_sort(vs.begin(), vs.begin() + n,
                         [&](int a, int b) { return g.degree(a) < g.degree(b); });
        root.ncells = 0;
        int k = 0;
        while (k < n) {
            int j = k;
            while (j < n && g.degree(vs[j]) == g.degree(vs[k])) ++j;
            int nc = root.ncells++;
            root.start[nc] = static_cast<std::int8_t>(k);
            root.len[nc] = static_cast<std::int8_t>(j - k);
            for (int p = k; p < j; ++p) root.vert[p] = vs[p];
            k = j;
        }
        search(root);

        CanonicalLabeling lab;
        lab.key.n = static_cast<std::uint8_t>(n);
        lab.key.bits = best;
        lab.order.assign(best_order.begin(), best_order.begin() + n);
        return lab;
    }
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
    if (g.order() > kMaxCanonicalVertices)
        throw std::invalid_argument("canonical labeling supports order <= 16, got " +
                                    std::to_string(g.order()));
    Labeler lab(g);
    return lab.run();
}

CanonicalKey canonical_key(const Graph& g) { return canonical_labeling(g).key; }

Graph canonical_form(const Graph& g) {
    CanonicalLabeling lab = canonical_labeling(g);
    std::vector<int> perm(g.order());
    for (int pos = 0; pos < g.order(); ++pos) perm[lab.order[pos]] = pos;
    return g.permuted(perm);
}

std::string to_hex(const CanonicalKey& key) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%02x%016llx%016llx", key.n,
                  static_cast<unsigned long long>(key.bits[0]),
                  static_cast<unsigned long long>(key.bits[1]));
    return buf;
}

} // namespace alphaspectra
