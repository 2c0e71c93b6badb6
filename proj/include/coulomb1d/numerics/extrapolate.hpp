#pragma once

#include <utility>
#include <vector>

namespace c1d {

enum class ExtrapolationModel {
    richardson_log,    // basis 1, log e, e log^2 e, e log e, e, e^2 log^2 e, ...
    richardson_power,  // basis 1, e, e^2, ...
};

struct ExtrapolationSpec {
    std::vector<double> grid;  // strictly decreasing, positive
    ExtrapolationModel model = ExtrapolationModel::richardson_power;
    int order = 2;             // number of correction terms beyond the constant

    void validate() const;
};

struct LimitEstimate {
    double value;
    double uncertainty;  // |fit(order) - fit(order - 1)|, or residual norm when order is 1
};

// Least-squares fit of value(e) on the model basis; the constant term is
// the e -> 0 limit. Throws convergence_error when the fit is ill-conditioned.
LimitEstimate extrapolate_limit(const std::vector<std::pair<double, double>>& samples,
                                const ExtrapolationSpec& spec);

} // namespace c1d
