#pragma once

#include <array>
#include <complex>

#include "coulomb1d/numerics/complex.hpp"
#include "coulomb1d/numerics/precision.hpp"
#include "coulomb1d/specfun/coulomb.hpp"

namespace c1d {

enum class TruncationForm { hole, plateau };

// Cutoff in the same length units as 1/k, so the matching point is u = k epsilon.
struct TruncationConfig {
    Real epsilon;
    TruncationForm form = TruncationForm::hole;

    void validate() const;
};

struct ScatteringSolution {
    Complex t, r;
    Real T, R;
    int eps_sign = 1;       // t/|t| = i eps r/|r|
    int epsprime_sign = 1;  // Re t = eps' T
    int achieved_digits = 0;

    // Fills T, R and the two signs; a sign that is undetermined (T = 0 or 1) stays +1.
    static ScatteringSolution from_amplitudes(const Complex& t, const Complex& r, int digits = 0);
};

struct SMatrix {
    std::array<std::array<std::complex<double>, 2>, 2> entries;

    // max |(S S^dagger - I)_ij|
    double unitarity_defect() const;
};

enum class Side { L, R };

struct ConnectionCoefficients {
    Complex A, B, a, b;
};

// Outgoing Coulomb wave H = G + i F and dH/du at u > 0; H ~ e^{i(u - Theta)}.
ComplexPair outgoing_wave(const Real& eta, const Real& u);

// Right half-barrier: plane wave for x < epsilon, t H(kx) beyond.
ScatteringSolution half_barrier(const ProblemParams& params, const TruncationConfig& cfg,
                                const PrecisionContext& ctx = {});

// Symmetric double barrier built from the half-barrier, t^2 / (1 - e^{2ik eps} r^2).
Complex composed_transmission(const ProblemParams& params, const TruncationConfig& cfg,
                              const PrecisionContext& ctx = {});
// The same quantity from the closed form in H and dH; must match the composition.
Complex composed_transmission_closed(const ProblemParams& params, const TruncationConfig& cfg,
                                     const PrecisionContext& ctx = {});

// Exact symmetric matching through even and odd channels, S = -(H-' - L H-)/(H+' - L H+)
// with L the interior log-derivative at u = k eps; t = (S_e - S_o)/2, r = (S_e + S_o)/2.
// hole: free interior. plateau: interior potential lambda/eps, oscillatory or evanescent.
ScatteringSolution symmetric_solution(const ProblemParams& params, const TruncationConfig& cfg,
                                      const PrecisionContext& ctx = {});
Real plateau_transmission(const ProblemParams& params, const TruncationConfig& cfg,
                          const PrecisionContext& ctx = {});
// Plateau matching with F, G replaced by their small-u expansions at the connection point.
Real plateau_transmission_taylor(const ProblemParams& params, const TruncationConfig& cfg,
                                 const PrecisionContext& ctx = {});

// |T|^2 from a cutoff sweep entry, escalated until successive precisions agree.
struct SweepPoint {
    Real epsilon;
    Real probability;
    int achieved_digits = 0;
    double rel_change = 0.0;
};
// hole: |composed_transmission|^2. plateau: plateau_transmission.
SweepPoint transmission_escalated(const ProblemParams& params, const TruncationConfig& cfg,
                                  const PrecisionContext& ctx = {});

// Parametrized S with the eps, eps' signs; unitary for 0 <= T <= 1.
SMatrix s_matrix(double T, int eps_sign, int epsprime_sign);
// ((r, t), (t, r)) from computed amplitudes.
SMatrix s_matrix(const ScatteringSolution& sol);

// Asymptotic coefficients: phi ~ A sin + B cos (u -> +inf), a e^{pi eta} sin + b e^{-pi eta} cos (u -> -inf).
ConnectionCoefficients coefficients_from_t_r(const ScatteringSolution& sol, Side side, const Real& eta);
// Same coefficients written through T and the two signs.
ConnectionCoefficients coefficients_from_T(const Real& T, int eps_sign, int epsprime_sign, Side side,
                                           const Real& eta);

struct WkbResult {
    double lambda_G;         // int_0^{R_c} kappa, quadrature
    double lambda_G_closed;  // pi eta
    double lambda_R;         // int_0^R kappa, quadrature
    double lambda_R_closed;
    double P;                // e^{-2 (lambda_G - lambda_R)}
    double P_printed;        // e^{-2 pi eta} e^{32 m c R / hbar^2}, the form without the square root
    double P_sqrt;           // e^{-2 pi eta} e^{sqrt(32 m c R) / hbar}, small-R limit of P
    double exact_T;          // |t|^2 of the half-barrier at epsilon = R
    double eta;
};

// V_C = coupling / r; hbar = 1. Requires coupling > 0, energy > 0 and 0 < R < R_c.
WkbResult wkb_gamow(double mass_scale, double coupling, double energy, double inner_radius,
                    const PrecisionContext& ctx = {});

} // namespace c1d
