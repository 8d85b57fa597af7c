#include "alphaspectra/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "alphaspectra/linalg.hpp"

namespace alphaspectra {

Partition trivial_partition(int n) {
    Partition pi(1);
    pi[0].resize(n);
    std::iota(pi[0].begin(), pi[0].end(), 0);
    return pi;
}

Partition singleton_partition(int n) {
    Partition pi(n);
    for (int v = 0; v < n; ++v) pi[v] = {v};
    return pi;
}

void validate_partition(const Graph& g, const Partition& pi) {
    std::uint64_t seen = 0;
    int total = 0;
    for (const auto& cls : pi) {
        if (cls.empty()) throw std::invalid_argument("partition has an empty class");
        for (int v : cls) {
            if (v < 0 || v >= g.order()) throw std::out_of_range("partition vertex out of range");
            if ((seen >> v) & 1u) throw std::invalid_argument("partition classes overlap");
            seen |= std::uint64_t{1} << v;
            ++total;
        }
    }
    if (total != g.order()) throw std::invalid_argument("partition does not cover all vertices");
}

Partition coarsest_equitable(const Graph& g, const Partition& seed) {
    validate_partition(g, seed);
    Partition cur = seed;
    for (;;) {
        std::vector<std::uint64_t> mask(cur.size(), 0);
        for (std::size_t c = 0; c < cur.size(); ++c)
            for (int v : cur[c]) mask[c] |= std::uint64_t{1} << v;

        Partition next;
        bool split = false;
        for (const auto& cls : cur) {
            if (cls.size() == 1) {
                next.push_back(cls);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(cls.size());
            for (int v : cls) {
                std::vector<int> counts(cur.size());
                for (std::size_t c = 0; c < cur.size(); ++c)
                    counts[c] = std::popcount(g.neighbors(v) & mask[c]);
                sig.emplace_back(std::move(counts), v);
            }
            std::stable_sort(sig.begin(), sig.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            std::size_t k = 0;
            while (k < sig.size()) {
                std::size_t j = k;
                std::vector<int> group;
                while (j < sig.size() && sig[j].first == sig[k].first) group.push_back(sig[j++].second);
                if (group.size() < cls.size()) split = true;
                next.push_back(std::move(group));
                k = j;
            }
        }
        cur = std::move(next);
        if (!split) return cur;
    }
}

QuotientMatrix quotient_matrix(const Graph& g, double alpha, const Partition& pi) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("quotient_matrix: alpha must lie in [0,1]");
    validate_partition(g, pi);

    int t = static_cast<int>(pi.size());
    std::vector<std::uint64_t> mask(t, 0);
    std::vector<int> class_of(g.order());
    for (int c = 0; c < t; ++c)
        for (int v : pi[c]) {
            mask[c] |= std::uint64_t{1} << v;
            class_of[v] = c;
        }

    QuotientMatrix q;
    q.t = t;
    q.alpha = alpha;
    q.entries.assign(static_cast<std::size_t>(t) * t, 0.0);
    q.equitable = true;

    for (int c = 0; c < t; ++c) {
        for (int j = 0; j < t; ++j) {
            bool first = true;
            double common = 0.0;
            double total = 0.0;
            for (int v : pi[c]) {
                double row = (1.0 - alpha) * std::popcount(g.neighbors(v) & mask[j]);
                if (j == class_of[v]) row += alpha * g.degree(v);
                total += row;
                if (first) {
                    common = row;
                    first = false;
                } else if (std::fabs(row - common) > 1e-9) {
                    q.equitable = false;
                }
            }
            q.entries[static_cast<std::size_t>(c) * t + j] = total / static_cast<double>(pi[c].size());
        }
    }
    return q;
}

double largest_eigenvalue_of_quotient(const QuotientMatrix& q) {
    if (!q.equitable)
        throw std::invalid_argument("largest_eigenvalue_of_quotient: partition is not equitable");
    // symmetric quotients (e.g. from the singleton partition) go through the
    // exact symmetric solver
    bool symmetric = true;
    for (int i = 0; i < q.t && symmetric; ++i)
        for (int j = i + 1; j < q.t; ++j)
            if (std::fabs(q.at(i, j) - q.at(j, i)) > 0.0) {
                symmetric = false;
                break;
            }
    if (symmetric) {
        std::vector<double> a(q.entries), eig(q.t);
        linalg::symmetric_eigenvalues(a.data(), q.t, eig.data());
        return eig[q.t - 1];
    }
    return linalg::dominant_eigenvalue_nonnegative(q.entries, q.t);
}

double char_poly_eval(const QuotientMatrix& q, double x) {
    std::vector<double> m(static_cast<std::size_t>(q.t) * q.t);
    for (int i = 0; i < q.t; ++i)
        for (int j = 0; j < q.t; ++j)
            m[static_cast<std::size_t>(i) * q.t + j] = (i == j ? x : 0.0) - q.at(i, j);
    return linalg::determinant(std::move(m), q.t);
}

} // namespace alphaspectra
