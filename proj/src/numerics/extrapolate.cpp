#include "coulomb1d/numerics/extrapolate.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "coulomb1d/errors.hpp"

namespace c1d {

void ExtrapolationSpec::validate() const {
    if (order < 0) throw config_error("extrapolation order must be >= 0");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0)) throw config_error("extrapolation grid must be positive");
        if (i > 0 && !(grid[i] < grid[i - 1])) throw config_error("extrapolation grid must be strictly decreasing");
    }
}

namespace {

double basis(ExtrapolationModel model, int j, double e) {
    if (j == 0) return 1.0;
    if (model == ExtrapolationModel::richardson_power) return std::pow(e, j);
    // log model: j = 1 -> log e, then e^k log^2 e, e^k log e, e^k for k = 1, 2, ...
    double l = std::log(e);
    if (j == 1) return l;
    int k = (j - 2) / 3 + 1;
    int r = (j - 2) % 3;
    double ek = std::pow(e, k);
    return r == 0 ? ek * l * l : (r == 1 ? ek * l : ek);
}

struct Fit {
    double c0;
    double residual;
};

Fit fit(const std::vector<std::pair<double, double>>& s, ExtrapolationModel model, int order) {
    const int m = static_cast<int>(s.size());
    const int p = order + 1;
    Eigen::MatrixXd A(m, p);
    Eigen::VectorXd y(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p; ++j) A(i, j) = basis(model, j, s[i].first);
        y(i) = s[i].second;
    }
    // Column scaling keeps e^k columns from vanishing against the constant.
    Eigen::VectorXd scale = A.colwise().norm().transpose();
    for (int j = 0; j < p; ++j)
        if (scale(j) > 0.0) A.col(j) /= scale(j);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    if (qr.rank() < p) throw convergence_error("extrapolation fit is rank deficient");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-13 * sv(0)) throw convergence_error("extrapolation fit is ill-conditioned");
    Eigen::VectorXd c = qr.solve(y);
    return {c(0) / scale(0), (A * c - y).norm()};
}

} // namespace

LimitEstimate extrapolate_limit(const std::vector<std::pair<double, double>>& samples,
                                const ExtrapolationSpec& spec) {
    spec.validate();
    if (static_cast<int>(samples.size()) < spec.order + 1)
        throw config_error("extrapolation needs at least order + 1 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!(samples[i].first > 0.0)) throw config_error("sample abscissae must be positive");
        if (i > 0 && !(samples[i].first < samples[i - 1].first))
            throw config_error("sample abscissae must be strictly decreasing");
    }
    Fit hi = fit(samples, spec.model, spec.order);
    double unc = hi.residual;
    if (spec.order >= 1) {
        Fit lo = fit(samples, spec.model, spec.order - 1);
        unc = std::max(std::abs(hi.c0 - lo.c0), hi.residual);
    }
    return {hi.c0, unc};
}

} // namespace c1d
