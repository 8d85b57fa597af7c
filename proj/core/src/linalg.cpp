#include "alphaspectra/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace alphaspectra::linalg {

namespace {

// Householder reduction to tridiagonal form, eigenvalues only (lower
// triangle of a is used and destroyed).
void householder_tridiag(double* a, int n, double* d, double* e) {
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Implicit-shift QL on a tridiagonal matrix; eigenvalues land in d.
void ql_implicit(double* d, double* e, int n) {
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= DBL_EPSILON * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw std::runtime_error("QL iteration did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

int lu_factor(std::vector<double>& m, int n, std::vector<int>& piv, double pivot_floor) {
    piv.resize(n);
    std::iota(piv.begin(), piv.end(), 0);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pr = col;
        double pmax = std::fabs(m[piv[col] * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::fabs(m[piv[r] * n + col]);
            if (v > pmax) {
                pmax = v;
                pr = r;
            }
        }
        if (pr != col) {
            std::swap(piv[col], piv[pr]);
            sign = -sign;
        }
        double& pivot = m[piv[col] * n + col];
        if (std::fabs(pivot) < pivot_floor)
            pivot = pivot >= 0 ? pivot_floor : -pivot_floor;
        if (pivot == 0.0) return 0;
        for (int r = col + 1; r < n; ++r) {
            double f = m[piv[r] * n + col] / pivot;
            m[piv[r] * n + col] = f;
            if (f == 0.0) continue;
            for (int c = col + 1; c < n; ++c) m[piv[r] * n + c] -= f * m[piv[col] * n + c];
        }
    }
    return sign;
}

} // namespace

void symmetric_eigenvalues(double* a, int n, double* eig) {
    if (n == 1) {
        eig[0] = a[0];
        return;
    }
    std::vector<double> e(n);
    householder_tridiag(a, n, eig, e.data());
    ql_implicit(eig, e.data(), n);
    std::sort(eig, eig + n);
}

double determinant(std::vector<double> m, int n) {
    std::vector<int> piv;
    int sign = lu_factor(m, n, piv, 0.0);
    if (sign == 0) return 0.0;
    double det = sign;
    for (int i = 0; i < n; ++i) det *= m[piv[i] * n + i];
    return det;
}

double solve_perturbed(std::vector<double> m, int n, std::vector<double>& b) {
    double scale = 0.0;
    for (double v : m) scale = std::max(scale, std::fabs(v));
    double floor = scale > 0 ? scale * 1e-14 : 1e-300;
    std::vector<int> piv;
    lu_factor(m, n, piv, floor);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        double s = b[piv[i]];
        for (int j = 0; j < i; ++j) s -= m[piv[i] * n + j] * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= m[piv[i] * n + j] * x[j];
        x[i] = s / m[piv[i] * n + i];
    }
    b = std::move(x);
    return floor;
}

double dominant_eigenvalue_nonnegative(const std::vector<double>& q, int n) {
    for (double v : q)
        if (v < 0.0) throw std::invalid_argument("matrix has a negative entry");
    // support components (the pattern is symmetric for our quotients; use
    // the symmetrized pattern so components are well defined either way)
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && (q[u * n + v] != 0.0 || q[v * n + u] != 0.0)) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }

    double best = -HUGE_VAL;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> idx;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) idx.push_back(v);
        int t = static_cast<int>(idx.size());
        if (t == 1) {
            best = std::max(best, q[idx[0] * n + idx[0]]);
            continue;
        }
        double shift = 1.0;
        for (int i = 0; i < t; ++i) shift = std::max(shift, 1.0 + std::fabs(q[idx[i] * n + idx[i]]));
        std::vector<double> b(t * t);
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                b[i * t + j] = q[idx[i] * n + idx[j]] + (i == j ? shift : 0.0);

        std::vector<double> x(t, 1.0), y(t);
        double lo = 0.0, hi = 0.0;
        for (long iter = 0; iter < 2000000; ++iter) {
            lo = HUGE_VAL;
            hi = -HUGE_VAL;
            double norm = 0.0;
            for (int i = 0; i < t; ++i) {
                double s = 0.0;
                for (int j = 0; j < t; ++j) s += b[i * t + j] * x[j];
                y[i] = s;
                double ratio = s / x[i];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
                norm = std::max(norm, s);
            }
            for (int i = 0; i < t; ++i) x[i] = y[i] / norm;
            if (hi - lo < 1e-12) break;
        }
        best = std::max(best, (lo + hi) / 2.0 - shift);
    }
    return best;
}

} // namespace alphaspectra::linalg
