#include "coulomb1d/scatter/scatter.hpp"

#include <algorithm>
#include <cmath>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/specfun/gamma.hpp"

namespace c1d {

namespace {

Complex I() { return imag_unit<Real>(); }

struct Setup {
    Real eta, u;
};

Setup setup(const ProblemParams& params, const TruncationConfig& cfg) {
    cfg.validate();
    if (params.energy_sign != EnergySign::positive) throw config_error("scattering needs positive energy");
    return {lift(params.eta), lift(params.k) * lift(cfg.epsilon)};
}

int sign_of(const Real& x) { return x < 0 ? -1 : 1; }

// Channel S for interior log-derivative L, outside waves H+ = G + iF, H- = conj(H+).
Complex channel_S(const ComplexPair& hp, const Complex& L) {
    Complex hm = conj(hp.value), dhm = conj(hp.derivative);
    return -(dhm - L * hm) / (hp.derivative - L * hp.value);
}

struct InteriorLogDerivs {
    Real even, odd;
};

InteriorLogDerivs interior(const Real& eta, const Real& u, TruncationForm form) {
    if (form == TruncationForm::hole) return {Real(-tan(u)), Real(1 / tan(u))};
    Real kp2 = 1 - 2 * eta / u;
    if (kp2 > 0) {
        Real kp = sqrt(kp2);
        return {Real(-kp * tan(kp * u)), Real(kp / tan(kp * u))};
    }
    if (kp2 == 0) return {Real(0), Real(1 / u)};
    // Evanescent interior: cosh and sinh enter only through tanh, which stays bounded.
    Real kap = sqrt(-kp2);
    Real th = tanh(kap * u);
    return {Real(kap * th), Real(kap / th)};
}

ScatteringSolution match(const ComplexPair& hp, const InteriorLogDerivs& L, int digits) {
    Complex se = channel_S(hp, Complex(L.even));
    Complex so = channel_S(hp, Complex(L.odd));
    return ScatteringSolution::from_amplitudes((se - so) / Real(2), (se + so) / Real(2), digits);
}

} // namespace

void TruncationConfig::validate() const {
    if (!(epsilon > 0)) throw config_error("truncation epsilon must be positive");
}

ScatteringSolution ScatteringSolution::from_amplitudes(const Complex& t, const Complex& r, int digits) {
    ScatteringSolution s;
    s.t = t;
    s.r = r;
    s.T = norm(t);
    s.R = norm(r);
    s.achieved_digits = digits;
    if (s.T > 0) s.epsprime_sign = sign_of(t.re);
    if (s.T > 0 && s.R > 0) s.eps_sign = sign_of((t * conj(r)).im);
    return s;
}

double SMatrix::unitarity_defect() const {
    double worst = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::complex<double> acc = 0;
            for (int k = 0; k < 2; ++k) acc += entries[i][k] * std::conj(entries[j][k]);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    return worst;
}

ComplexPair outgoing_wave(const Real& eta, const Real& u) {
    if (!(u > 0)) throw domain_error("outgoing wave is matched at u > 0");
    WaveEval w = coulomb_FG(eta, u);
    return {Complex(w.g, w.f), Complex(w.dg, w.df)};
}

ScatteringSolution half_barrier(const ProblemParams& params, const TruncationConfig& cfg,
                                const PrecisionContext& ctx) {
    ctx.validate();
    if (cfg.form != TruncationForm::hole) throw config_error("half_barrier needs the hole form");
    PrecisionGuard guard(ctx.working_digits);
    Setup s = setup(params, cfg);
    ComplexPair h = outgoing_wave(s.eta, s.u);
    // 1 + r = t H, 1 - r = -i t H'
    Complex den = h.value - I() * h.derivative;
    Complex t = Complex(Real(2)) / den;
    Complex r = (h.value + I() * h.derivative) / den;
    return ScatteringSolution::from_amplitudes(t, r, ctx.working_digits);
}

Complex composed_transmission(const ProblemParams& params, const TruncationConfig& cfg,
                              const PrecisionContext& ctx) {
    ScatteringSolution h = half_barrier(params, cfg, ctx);
    PrecisionGuard guard(ctx.working_digits);
    Real u = lift(params.k) * lift(cfg.epsilon);
    Complex e2 = exp(Complex(Real(0), 2 * u));
    return h.t * h.t / (Complex(Real(1)) - e2 * h.r * h.r);
}

Complex composed_transmission_closed(const ProblemParams& params, const TruncationConfig& cfg,
                                     const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits);
    Setup s = setup(params, cfg);
    ComplexPair h = outgoing_wave(s.eta, s.u);
    Complex e2 = exp(Complex(Real(0), 2 * s.u));
    Complex one(Real(1));
    Complex den = (one - e2) * (h.value * h.value - h.derivative * h.derivative) -
                  Real(2) * I() * (one + e2) * h.value * h.derivative;
    return Complex(Real(4)) / den;
}

ScatteringSolution symmetric_solution(const ProblemParams& params, const TruncationConfig& cfg,
                                      const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits);
    Setup s = setup(params, cfg);
    return match(outgoing_wave(s.eta, s.u), interior(s.eta, s.u, cfg.form), ctx.working_digits);
}

Real plateau_transmission(const ProblemParams& params, const TruncationConfig& cfg,
                          const PrecisionContext& ctx) {
    if (cfg.form != TruncationForm::plateau) throw config_error("plateau_transmission needs the plateau form");
    return symmetric_solution(params, cfg, ctx).T;
}

Real plateau_transmission_taylor(const ProblemParams& params, const TruncationConfig& cfg,
                                 const PrecisionContext& ctx) {
    ctx.validate();
    PrecisionGuard guard(ctx.working_digits);
    Setup s = setup(params, cfg);
    MaclaurinEval m = coulomb_maclaurin(s.eta, s.u);
    ComplexPair hp{Complex(m.g, m.f), Complex(m.dg, m.df)};
    return match(hp, interior(s.eta, s.u, TruncationForm::plateau), ctx.working_digits).T;
}

SweepPoint transmission_escalated(const ProblemParams& params, const TruncationConfig& cfg,
                                  const PrecisionContext& ctx) {
    auto run = [&](const PrecisionContext& c) -> Real {
        if (cfg.form == TruncationForm::hole) return norm(composed_transmission(params, cfg, c));
        return plateau_transmission(params, cfg, c);
    };
    auto e = escalate(ctx, run, [](const Real& a, const Real& b) { return rel_diff(a, b); });
    return {cfg.epsilon, e.value, e.achieved_digits, e.rel_change};
}

SMatrix s_matrix(double T, int eps_sign, int epsprime_sign) {
    if (!(T >= 0.0 && T <= 1.0)) throw domain_error("transmission coefficient must lie in [0, 1]");
    if (std::abs(eps_sign) != 1 || std::abs(epsprime_sign) != 1) throw config_error("signs must be +1 or -1");
    double s = std::sqrt(T - T * T);
    double e = eps_sign, ep = epsprime_sign;
    std::complex<double> diag(T - 1.0, e * ep * s);
    std::complex<double> off(ep * T, e * s);
    return SMatrix{{{{diag, off}, {off, diag}}}};
}

SMatrix s_matrix(const ScatteringSolution& sol) {
    std::complex<double> r = to_std(sol.r), t = to_std(sol.t);
    return SMatrix{{{{r, t}, {t, r}}}};
}

ConnectionCoefficients coefficients_from_t_r(const ScatteringSolution& sol, Side side, const Real& eta0) {
    Real eta = lift(eta0);
    Real ep = exp(pi_real() * eta), em = exp(-pi_real() * eta);
    Complex one(Real(1));
    Complex i = I();
    if (side == Side::L)
        return {i * sol.t, sol.t, i * (one - sol.r) * em, (one + sol.r) * ep};
    return {-i * (one - sol.r), one + sol.r, -i * sol.t * em, sol.t * ep};
}

ConnectionCoefficients coefficients_from_T(const Real& T0, int eps_sign, int epsprime_sign, Side side,
                                           const Real& eta0) {
    Real T = lift(T0), eta = lift(eta0);
    if (!(T >= 0 && T <= 1)) throw domain_error("transmission coefficient must lie in [0, 1]");
    Real s = sqrt(T * (1 - T));
    Real e = eps_sign, p = epsprime_sign;
    Real ep = exp(pi_real() * eta), em = exp(-pi_real() * eta);
    if (side == Side::L)
        return {Complex(Real(-e * s), Real(p * T)), Complex(Real(p * T), Real(e * s)),
                em * Complex(Real(e * p * s), Real(2 - T)), ep * Complex(T, Real(e * p * s))};
    return {Complex(Real(-e * p * s), Real(-(2 - T))), Complex(T, Real(e * p * s)),
            em * Complex(Real(e * s), Real(-p * T)), ep * Complex(Real(p * T), Real(e * s))};
}

} // namespace c1d
