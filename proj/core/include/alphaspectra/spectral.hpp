#ifndef ALPHASPECTRA_SPECTRAL_HPP
#define ALPHASPECTRA_SPECTRAL_HPP

#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

// A_alpha(G) = alpha*D(G) + (1-alpha)*A(G), alpha in [0,1].
struct AlphaMatrix {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> entries; // row-major n*n, symmetric

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

AlphaMatrix alpha_matrix(const Graph& g, double alpha);

struct SpectralResult {
    double lambda = 0.0;          // the A_alpha-index
    std::vector<double> perron;   // eigenvector at lambda, unit max-norm
    double residual = 0.0;        // ||A x - lambda x||_inf
};

// Largest eigenvalue plus Perron vector; alpha in [0,1). For connected input
// the vector is strictly positive. Disconnected input is rejected unless
// require_connected is false.
SpectralResult spectral_radius(const Graph& g, double alpha, bool require_connected = true);

// Largest eigenvalue only; the cheap call the searches hammer on.
double alpha_index(const Graph& g, double alpha);

// Full spectrum, ascending.
std::vector<double> alpha_spectrum(const Graph& g, double alpha);

// lambda_alpha(K_{1,delta}) in closed form.
double star_index(int delta, double alpha);

// lambda_alpha(K_{a,b}) in closed form.
double complete_bipartite_index(int a, int b, double alpha);

struct IndexBounds {
    double lower = 0.0;      // 2|E|/|V|
    double upper = 0.0;      // max over edge orientations of alpha d(u) + (1-alpha) d(v)
    double lower_star = 0.0; // star bound from the maximum degree
};

IndexBounds index_bounds(const Graph& g, double alpha);

// The alpha thresholds where lambda crosses 2 on the small trees:
// s1(n) in closed form, s2/s3/s4 as the [0,1] roots of their cubics.
struct ThresholdConstants {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0;
};

ThresholdConstants threshold_constants(int n);

} // namespace alphaspectra

#endif
