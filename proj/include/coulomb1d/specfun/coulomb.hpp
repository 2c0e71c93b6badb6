#pragma once

#include "coulomb1d/numerics/complex.hpp"
#include "coulomb1d/numerics/precision.hpp"

namespace c1d {

enum class EnergySign { positive, negative };

// Dimensionless couplings. u = k x is an argument, never stored.
struct ProblemParams {
    Real lambda;
    EnergySign energy_sign = EnergySign::positive;
    Real k;
    Real eta;

    // e = energy in units where the Schrodinger equation reads -psi'' + lambda/|x| psi = e psi.
    static ProblemParams from_lambda_energy(const Real& lambda, const Real& e);
    // k = 1, lambda = 2 eta: the parametrization used by scattering sweeps.
    static ProblemParams from_eta(const Real& eta);

    void validate() const;
};

enum class WaveRegime { series, maclaurin, asymptotic };

struct WaveEval {
    Real f, g, df, dg;
    WaveRegime regime = WaveRegime::series;
};

struct MaclaurinEval {
    Real f, g, df, dg, d2f, d2g;
};

Real coulomb_C(const Real& eta);
// iota_eta = eta Im Gamma(1 - i eta)
Real coulomb_iota(const Real& eta);
// Re psi(1 + i eta); even in eta.
Real coulomb_p(const Real& eta);
// eta log(2u) - arg Gamma(1 + i eta), continuous branch of arg. Requires u > 0.
Real theta_phase(const Real& eta, const Real& u);

// F_eta(u), G_eta(u) and u-derivatives for any real u != 0, at the current
// default precision. G = Re X and, in the asymptotic regime, F follows from
// Im X = -F (u > 0) and Im X = -e^{2 pi eta} F (u < 0).
WaveEval coulomb_FG(const Real& eta, const Real& u);
// Same, forcing a regime; used by consistency tests.
WaveEval coulomb_FG_series(const Real& eta, const Real& u);
WaveEval coulomb_FG_asymptotic(const Real& eta, const Real& u);

// X_eta(u) = 2 i u e^{-iu} Gamma(1 - i eta)/C_eta U(1 - i eta, 2, 2iu) and dX/du.
struct ComplexPair {
    Complex value, derivative;
};
ComplexPair coulomb_X(const Real& eta, const Real& u);

// The closed form printed alongside Re X: X - i(-1 + pi eta + 2 iota) F / C^2.
// Kept as a diagnostic; its imaginary part does not vanish in general.
Complex g_printed_combination(const Real& eta, const Real& u);

// Basic solutions on R \ {0}: f = F_eta, g = G_eta for u > 0 and
// f = F_{-eta}, g = G_{-eta} for u < 0.
WaveEval coulomb_eval(const ProblemParams& params, const Real& u, const PrecisionContext& ctx);

// Large-|u| forms with 1/u and 1/u^2 corrections (order 0, 1 or 2), applied to
// F_eta, G_eta; for u < 0 the e^{-pi eta} and e^{pi eta} prefactors enter and
// the phase uses Theta_eta(|u|). Derivatives are left at zero.
WaveEval coulomb_asymptotic(const Real& eta, const Real& u, int order);

// Validity radius of the small-u expansion.
Real maclaurin_radius(const Real& eta);
// Small-u forms of F_eta, G_eta and two derivatives, log(2|u|) on both sides.
MaclaurinEval coulomb_maclaurin(const Real& eta, const Real& u);

} // namespace c1d
