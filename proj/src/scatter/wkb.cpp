#include <cmath>
#include <numbers>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/quadrature.hpp"
#include "coulomb1d/scatter/scatter.hpp"

namespace c1d {

WkbResult wkb_gamow(double m, double c, double E, double R, const PrecisionContext& ctx) {
    if (!(m > 0.0)) throw config_error("mass scale must be positive");
    if (!(c > 0.0)) throw domain_error("WKB escape needs a repulsive tail (coupling > 0)");
    if (!(E > 0.0)) throw domain_error("WKB escape needs positive energy");
    const double Rc = c / E;
    if (!(R > 0.0 && R < Rc)) throw domain_error("inner radius must satisfy 0 < R < R_c");

    // kappa = sqrt(2mc) sqrt(1/r - 1/R_c); with r = R_c sin^2 th the turning-point
    // singularity disappears and kappa dr = 2 sqrt(2 m c R_c) cos^2 th dth.
    const double scale = 2.0 * std::sqrt(2.0 * m * c * Rc);
    Integrand f = [scale](double th) {
        double co = std::cos(th);
        return scale * co * co;
    };
    const double th_R = std::asin(std::sqrt(R / Rc));
    QuadResult G = gauss_kronrod(f, 0.0, std::numbers::pi / 2, 1e-14, 200);
    QuadResult Rr = gauss_kronrod(f, 0.0, th_R, 1e-14, 200);

    WkbResult w{};
    const double k = std::sqrt(2.0 * m * E);
    w.eta = m * c / k;
    w.lambda_G = G.value;
    w.lambda_G_closed = std::numbers::pi * w.eta;
    w.lambda_R = Rr.value;
    w.lambda_R_closed = scale / 2 * (th_R + std::sin(th_R) * std::cos(th_R));
    w.P = std::exp(-2.0 * (w.lambda_G - w.lambda_R));
    const double PG = std::exp(-2.0 * std::numbers::pi * w.eta);
    w.P_printed = PG * std::exp(32.0 * m * c * R);
    w.P_sqrt = PG * std::exp(std::sqrt(32.0 * m * c * R));

    PrecisionGuard guard(ctx.working_digits);
    ProblemParams p = ProblemParams::from_lambda_energy(Real(2.0 * m * c), Real(2.0 * m * E));
    TruncationConfig cfg{Real(R), TruncationForm::hole};
    w.exact_T = static_cast<double>(half_barrier(p, cfg, ctx).T);
    return w;
}

} // namespace c1d
