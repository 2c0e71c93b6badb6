#pragma once

#include <vector>

#include "coulomb1d/numerics/quadrature.hpp"

namespace c1d {

using Matrix = std::vector<std::vector<double>>;

struct GramResult {
    int N = 0;
    Matrix M;                      // normalized half-line overlaps of xi_0 .. xi_{N-1}
    std::vector<double> eigenvalues;  // ascending
    Matrix P;                      // M^{-1/2}, symmetric
    double diagonal_deviation = 0;  // max |P_ii - 1|
};

// Raw half-line overlap matrix <xi_i|xi_j>, |lambda| = 1.
Matrix anomalous_overlap_matrix(int N, Scheme scheme = Scheme::tanh_sinh);

// Throws config_error for N < 1 and numeric_error if the eigensolver fails
// or M is not positive definite.
GramResult gram_analysis(int N, Scheme scheme = Scheme::tanh_sinh);
// Same analysis on a precomputed raw overlap matrix (leading N x N block).
GramResult gram_from_overlaps(const Matrix& raw, int N);

} // namespace c1d
