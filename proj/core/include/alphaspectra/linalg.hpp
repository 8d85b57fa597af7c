#ifndef ALPHASPECTRA_LINALG_HPP
#define ALPHASPECTRA_LINALG_HPP

#include <vector>

namespace alphaspectra::linalg {

// Eigenvalues of a symmetric matrix (row-major, destroyed) via Householder
// tridiagonalization followed by implicit-shift QL. Results ascending in eig.
void symmetric_eigenvalues(double* a, int n, double* eig);

// det(m) by LU with partial pivoting; m is row-major n*n, passed by value.
double determinant(std::vector<double> m, int n);

// Solve m x = b in place (b becomes x). Near-zero pivots are replaced by a
// tiny multiple of the matrix scale, which is exactly what inverse iteration
// wants. Returns the pivot floor that was used (0 if none).
double solve_perturbed(std::vector<double> m, int n, std::vector<double>& b);

// Largest eigenvalue of an entrywise-nonnegative matrix by shifted power
// iteration with a Collatz-Wielandt bracket, split over support components.
double dominant_eigenvalue_nonnegative(const std::vector<double>& q, int n);

} // namespace alphaspectra::linalg

#endif
