#include "coulomb1d/specfun/coulomb.hpp"

#include <algorithm>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/specfun/gamma.hpp"
#include "coulomb1d/specfun/hypergeometric.hpp"

namespace c1d {

namespace {

int digits_now() { return static_cast<int>(Real::default_precision()); }

Complex I() { return imag_unit<Real>(); }

} // namespace

ProblemParams ProblemParams::from_lambda_energy(const Real& lambda, const Real& e) {
    if (e == 0) throw config_error("zero energy has no wavenumber");
    ProblemParams p;
    p.lambda = lift(lambda);
    p.energy_sign = e > 0 ? EnergySign::positive : EnergySign::negative;
    p.k = sqrt(abs(lift(e)));
    p.eta = p.lambda / (2 * p.k);
    p.validate();
    return p;
}

ProblemParams ProblemParams::from_eta(const Real& eta) {
    ProblemParams p;
    p.eta = lift(eta);
    p.k = 1;
    p.lambda = 2 * p.eta;
    p.energy_sign = EnergySign::positive;
    return p;
}

void ProblemParams::validate() const {
    if (!(k > 0)) throw config_error("wavenumber must be positive");
    if (energy_sign == EnergySign::negative && !(lambda < 0))
        throw config_error("negative energy requires an attractive coupling");
    Real expect = lambda / (2 * k);
    Real tol = pow(Real(10), -(digits_now() - 4)) * std::max(Real(1), abs(expect));
    if (abs(eta - expect) > tol) throw config_error("eta must equal lambda / (2k)");
}

Real coulomb_C(const Real& eta0) {
    Real eta = lift(eta0);
    if (eta == 0) return Real(1);
    Real x = pi_real() * eta;
    return exp(-x / 2) * sqrt(x / sinh(x));
}

Real coulomb_iota(const Real& eta0) {
    Real eta = lift(eta0);
    return eta * gamma_complex(Complex(Real(1), -eta)).im;
}

Real coulomb_p(const Real& eta0) {
    Real eta = lift(eta0);
    return digamma_complex(Complex(Real(1), eta)).re;
}

Real theta_phase(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    if (!(u > 0)) throw domain_error("theta_phase needs u > 0");
    return eta * log(2 * u) - lgamma_complex(Complex(Real(1), eta)).im;
}

namespace {

// V = z U(1 - i eta, 2, z) at z = 2iu, so u U = V / (2i) stays finite as u -> 0.
ComplexPair x_from_v(const Real& eta, const Real& u, const HypValue& V) {
    Complex a(Real(1), -eta);
    Complex pref = gamma_complex(a) / coulomb_C(eta);  // 2i / (2i) folded
    Complex e = exp(Complex(Real(0), -u));
    Complex val = pref * e * V.value;
    Complex der = pref * e * (Complex(Real(0), Real(-1)) * V.value + Real(2) * I() * V.derivative);
    return {val, der};
}

HypValue v_of(const Real& eta, const Real& u, bool asym) {
    Complex a(Real(1), -eta);
    Complex z(Real(0), 2 * u);
    if (!asym) return hyp_zU_log_series(a, z);
    HypValue U = hyp_U_asymptotic(a, Complex(Real(2)), z);
    return {z * U.value, U.value + z * U.derivative, U.regime};
}

bool use_asymptotic(const Real& eta, const Real& u) {
    return abs(2 * u) > asymptotic_radius(abs(eta), digits_now());
}

} // namespace

ComplexPair coulomb_X(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    if (u == 0) throw domain_error("X is singular at u = 0");
    return x_from_v(eta, u, v_of(eta, u, use_asymptotic(eta, u)));
}

WaveEval coulomb_FG_series(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    if (u == 0) throw domain_error("basic solutions are singular at u = 0");
    Complex a(Real(1), -eta);
    HypValue M = hyp_M_series(a, Complex(Real(2)), Complex(Real(0), 2 * u));
    Real C = coulomb_C(eta);
    Complex e = exp(Complex(Real(0), -u));
    Complex F = u * e * M.value;
    Complex dF = e * Complex(Real(1), -u) * M.value + u * e * (Real(2) * I()) * M.derivative;
    ComplexPair X = x_from_v(eta, u, v_of(eta, u, false));
    return {C * F.re, X.value.re, C * dF.re, X.derivative.re, WaveRegime::series};
}

WaveEval coulomb_FG_asymptotic(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    if (u == 0) throw domain_error("basic solutions are singular at u = 0");
    ComplexPair X = x_from_v(eta, u, v_of(eta, u, true));
    Real s = u > 0 ? Real(-1) : Real(-exp(-2 * pi_real() * eta));
    return {s * X.value.im, X.value.re, s * X.derivative.im, X.derivative.re, WaveRegime::asymptotic};
}

WaveEval coulomb_FG(const Real& eta, const Real& u) {
    if (use_asymptotic(lift(eta), lift(u))) {
        try {
            return coulomb_FG_asymptotic(eta, u);
        } catch (const convergence_error&) {
            // series with guard digits is always available
        }
    }
    return coulomb_FG_series(eta, u);
}

Complex g_printed_combination(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    WaveEval w = coulomb_FG(eta, u);
    ComplexPair X = coulomb_X(eta, u);
    Real C = coulomb_C(eta);
    Real c = -1 + pi_real() * eta + 2 * coulomb_iota(eta);
    return X.value - Complex(Real(0), c * w.f / (C * C));
}

WaveEval coulomb_eval(const ProblemParams& params, const Real& u, const PrecisionContext& ctx) {
    ctx.validate();
    if (params.energy_sign != EnergySign::positive)
        throw config_error("coulomb_eval covers the scattering regime only");
    PrecisionGuard guard(ctx.working_digits);
    Real uu = lift(u);
    if (uu == 0) throw domain_error("basic solutions are singular at u = 0");
    Real eta = uu > 0 ? lift(params.eta) : Real(-lift(params.eta));
    return coulomb_FG(eta, uu);
}

WaveEval coulomb_asymptotic(const Real& eta0, const Real& u0, int order) {
    Real eta = lift(eta0), u = lift(u0);
    if (u == 0) throw domain_error("asymptotic forms need u != 0");
    if (order < 0 || order > 2) throw config_error("asymptotic order must be 0, 1 or 2");
    Real e2 = eta * eta;
    // a = 1 + eta/(2u) + (5 eta^2 - eta^4)/(8u^2), b = eta^2/(2u) - (2 eta - 4 eta^3)/(8u^2), u signed
    Real a = 1, b = 0, da = 0, db = 0;
    if (order >= 1) {
        a += eta / (2 * u);
        b += e2 / (2 * u);
        da += -eta / (2 * u * u);
        db += -e2 / (2 * u * u);
    }
    if (order >= 2) {
        Real c2a = (5 * e2 - e2 * e2) / 8, c2b = -(2 * eta - 4 * eta * e2) / 8;
        a += c2a / (u * u);
        b += c2b / (u * u);
        da += -2 * c2a / (u * u * u);
        db += -2 * c2b / (u * u * u);
    }
    Real phi = u - theta_phase(eta, abs(u));
    Real dphi = 1 - eta / u;
    Real s = sin(phi), c = cos(phi);
    Real pf = 1, pg = 1;
    if (u < 0) {
        pf = exp(-pi_real() * eta);
        pg = exp(pi_real() * eta);
    }
    WaveEval w;
    w.f = pf * (a * s + b * c);
    w.g = pg * (a * c - b * s);
    w.df = pf * (da * s + db * c + dphi * (a * c - b * s));
    w.dg = pg * (da * c - db * s - dphi * (a * s + b * c));
    w.regime = WaveRegime::asymptotic;
    return w;
}

Real maclaurin_radius(const Real& eta) { return Real(0.05) / (1 + abs(eta)); }

MaclaurinEval coulomb_maclaurin(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    if (u == 0) throw domain_error("Maclaurin forms need u != 0");
    if (abs(u) >= maclaurin_radius(eta)) throw domain_error("u outside the Maclaurin validity radius");
    Real C = coulomb_C(eta);
    Real L = log(2 * abs(u)) + coulomb_p(eta) + 2 * euler_gamma_real();
    Real e2 = eta * eta;
    MaclaurinEval m;
    m.f = C * (u + eta * u * u);
    m.df = C * (1 + 2 * eta * u);
    m.d2f = C * 2 * eta;
    m.g = (2 * eta * (u + eta * u * u) * (L - 1) + (1 - (1 + 6 * e2) / 2 * u * u)) / C;
    m.dg = (2 * eta * ((1 + 2 * eta * u) * L - eta * u) - (1 + 6 * e2) * u) / C;
    m.d2g = (2 * eta * (2 * eta * L + eta + 1 / u) - (1 + 6 * e2)) / C;
    return m;
}

} // namespace c1d
