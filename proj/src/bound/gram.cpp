#include "coulomb1d/bound/gram.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "coulomb1d/bound/states.hpp"
#include "coulomb1d/errors.hpp"

namespace c1d {

namespace {

BoundState anomalous(int n) {
    BoundState s;
    s.kind = StateKind::anomalous;
    s.n = n;
    s.eta_n = -n - 0.5;
    s.energy = 1.0 / ((n + 0.5) * (n + 0.5));
    return s;
}

} // namespace

Matrix anomalous_overlap_matrix(int N, Scheme scheme) {
    if (N < 1) throw config_error("Gram size must be >= 1");
    Matrix M(N, std::vector<double>(N, 0.0));
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j)
            M[i][j] = M[j][i] = overlap(anomalous(i), anomalous(j), OverlapDomain::half_line, -1.0, scheme);
    return M;
}

GramResult gram_from_overlaps(const Matrix& raw, int N) {
    if (N < 1) throw config_error("Gram size must be >= 1");
    if (static_cast<int>(raw.size()) < N) throw config_error("overlap matrix smaller than N");
    Eigen::MatrixXd M(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) M(i, j) = raw[i][j] / std::sqrt(raw[i][i] * raw[j][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    if (es.info() != Eigen::Success) throw numeric_error("symmetric eigensolver failed");
    const Eigen::VectorXd& w = es.eigenvalues();
    if (!(w.minCoeff() > 0.0)) throw numeric_error("overlap matrix is not positive definite");
    Eigen::MatrixXd P = es.eigenvectors() * w.cwiseSqrt().cwiseInverse().asDiagonal() *
                        es.eigenvectors().transpose();
    GramResult g;
    g.N = N;
    g.M.assign(N, std::vector<double>(N));
    g.P.assign(N, std::vector<double>(N));
    for (int i = 0; i < N; ++i) {
        g.eigenvalues.push_back(w(i));
        for (int j = 0; j < N; ++j) {
            g.M[i][j] = M(i, j);
            g.P[i][j] = P(i, j);
        }
        g.diagonal_deviation = std::max(g.diagonal_deviation, std::abs(P(i, i) - 1.0));
    }
    return g;
}

GramResult gram_analysis(int N, Scheme scheme) {
    return gram_from_overlaps(anomalous_overlap_matrix(N, scheme), N);
}

} // namespace c1d
