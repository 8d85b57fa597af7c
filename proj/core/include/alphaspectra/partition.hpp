#ifndef ALPHASPECTRA_PARTITION_HPP
#define ALPHASPECTRA_PARTITION_HPP

#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

// Ordered list of disjoint vertex classes covering V.
using Partition = std::vector<std::vector<int>>;

Partition trivial_partition(int n);    // one class
Partition singleton_partition(int n);  // n classes

// Throws unless classes are disjoint, in range and cover V.
void validate_partition(const Graph& g, const Partition& pi);

// Coarsest equitable refinement of the seed: classes are split by their
// neighbour-count signature into every class until stable. The result is
// equitable for A_alpha at every alpha.
Partition coarsest_equitable(const Graph& g, const Partition& seed);

struct QuotientMatrix {
    int t = 0;
    double alpha = 0.0;
    std::vector<double> entries; // row-major t*t of average row sums
    bool equitable = false;      // exact per-vertex row-sum check at this alpha

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * t + j]; }
};

QuotientMatrix quotient_matrix(const Graph& g, double alpha, const Partition& pi);

// Largest eigenvalue of an equitable quotient (equals lambda_alpha of the
// graph by the quotient lemma). Throws on a non-equitable quotient.
double largest_eigenvalue_of_quotient(const QuotientMatrix& q);

// det(xI - Q) by LU elimination.
double char_poly_eval(const QuotientMatrix& q, double x);

} // namespace alphaspectra

#endif
