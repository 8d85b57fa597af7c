#include "alphaspectra/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "alphaspectra/linalg.hpp"

namespace alphaspectra {

namespace {

void check_alpha_closed(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1], got " + std::to_string(alpha));
}

void check_alpha_half_open(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in [0,1), got " + std::to_string(alpha));
}

void fill_alpha(const Graph& g, double alpha, double* a) {
    int n = g.order();
    for (int i = 0; i < n * n; ++i) a[i] = 0.0;
    for (int u = 0; u < n; ++u) {
        a[u * n + u] = alpha * g.degree(u);
        std::uint64_t row = g.neighbors(u);
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            a[u * n + v] = 1.0 - alpha;
        }
    }
}

} // namespace

AlphaMatrix alpha_matrix(const Graph& g, double alpha) {
    check_alpha_closed(alpha);
    AlphaMatrix m;
    m.n = g.order();
    m.alpha = alpha;
    m.entries.resize(static_cast<std::size_t>(m.n) * m.n);
    fill_alpha(g, alpha, m.entries.data());
    return m;
}

double alpha_index(const Graph& g, double alpha) {
    check_alpha_half_open(alpha);
    int n = g.order();
    thread_local std::vector<double> a, eig;
    a.resize(static_cast<std::size_t>(n) * n);
    eig.resize(n);
    fill_alpha(g, alpha, a.data());
    linalg::symmetric_eigenvalues(a.data(), n, eig.data());
    return eig[n - 1];
}

std::vector<double> alpha_spectrum(const Graph& g, double alpha) {
    check_alpha_closed(alpha);
    int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n), eig(n);
    fill_alpha(g, alpha, a.data());
    linalg::symmetric_eigenvalues(a.data(), n, eig.data());
    return eig;
}

SpectralResult spectral_radius(const Graph& g, double alpha, bool require_connected) {
    check_alpha_half_open(alpha);
    if (require_connected && !is_connected(g))
        throw std::invalid_argument("spectral_radius: graph is disconnected");

    int n = g.order();
    SpectralResult res;
    res.lambda = alpha_index(g, alpha);

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    fill_alpha(g, alpha, a.data());

    // inverse iteration at the computed eigenvalue
    std::vector<double> shifted(a);
    for (int i = 0; i < n; ++i) shifted[i * n + i] -= res.lambda;
    std::vector<double> x(n, 1.0);
    for (int pass = 0; pass < 3; ++pass) {
        linalg::solve_perturbed(shifted, n, x);
        double norm = 0.0;
        for (double v : x) norm = std::max(norm, std::fabs(v));
        for (double& v : x) v /= norm;
    }
    double sum = 0.0;
    for (double v : x) sum += v;
    if (sum < 0.0)
        for (double& v : x) v = -v;

    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = -res.lambda * x[i];
        for (int j = 0; j < n; ++j) s += a[i * n + j] * x[j];
        resid = std::max(resid, std::fabs(s));
    }
    res.perron = std::move(x);
    res.residual = resid;
    return res;
}

double star_index(int delta, double alpha) {
    if (delta < 1) throw std::invalid_argument("star_index: delta >= 1 required");
    check_alpha_half_open(alpha);
    double ad = alpha * (delta + 1);
    return 0.5 * (ad + std::sqrt(ad * ad + 4.0 * delta * (1.0 - 2.0 * alpha)));
}

double complete_bipartite_index(int a, int b, double alpha) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite_index: parts must be >= 1");
    check_alpha_closed(alpha);
    double an = alpha * (a + b);
    return 0.5 * (an + std::sqrt(an * an + 4.0 * static_cast<double>(a) * b * (1.0 - 2.0 * alpha)));
}

IndexBounds index_bounds(const Graph& g, double alpha) {
    check_alpha_half_open(alpha);
    IndexBounds out;
    out.lower = 2.0 * g.size() / g.order();
    for (auto [u, v] : g.edges()) {
        double du = g.degree(u), dv = g.degree(v);
        out.upper = std::max({out.upper, alpha * du + (1 - alpha) * dv, alpha * dv + (1 - alpha) * du});
    }
    int delta = g.max_degree();
    out.lower_star = delta >= 1 ? star_index(delta, alpha) : 0.0;
    return out;
}

namespace {

double cubic_root_in_unit_interval(double c3, double c2, double c1, double c0) {
    auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
    double lo = 0.0, hi = 1.0;
    if (!(f(lo) < 0.0 && f(hi) > 0.0))
        throw std::logic_error("cubic does not bracket a root in [0,1]");
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

ThresholdConstants threshold_constants(int n) {
    if (n < 4) throw std::invalid_argument("threshold_constants: n >= 4 required");
    ThresholdConstants t;
    double np1 = n + 1.0;
    t.s1 = 4.0 / (np1 + std::sqrt(np1 * np1 - 16.0));
    t.s2 = cubic_root_in_unit_interval(2.0, -11.0, 16.0, -3.0);
    t.s3 = cubic_root_in_unit_interval(1.0, -6.0, 9.0, -1.0);
    t.s4 = cubic_root_in_unit_interval(2.0, -13.0, 20.0, -1.0);
    return t;
}

} // namespace alphaspectra
