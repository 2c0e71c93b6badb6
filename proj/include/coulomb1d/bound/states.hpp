#pragma once

#include <vector>

#include "coulomb1d/numerics/extrapolate.hpp"
#include "coulomb1d/numerics/quadrature.hpp"

namespace c1d {

enum class StateKind { regular, anomalous };

// mu and nu pick the u < 0 continuation: zeta_n(-u) = -mu zeta_n(u), xi_n(-u) = nu xi_n(u).
struct ParityConvention {
    int mu = 1;
    int nu = 1;
};

struct BoundState {
    StateKind kind = StateKind::regular;
    int n = 1;
    double eta_n = -1;        // -n or -n - 1/2
    double energy = 1;        // E / E_1, E_1 the lowest Rydberg energy
    int parity_factor = 1;    // mu or nu
    double norm_const = 0.0;  // int over R of |psi(x)|^2 dx, with |lambda| = 1
    // Length scale: psi(x) = w(x |lambda| / scale).
    double scale() const { return kind == StateKind::regular ? 2.0 * n : 2.0 * n + 1.0; }
};

// Throws domain_error for lambda >= 0 or n_max < 1. Regular states start at
// n = 1, anomalous at n = 0, both up to n_max.
std::vector<BoundState> spectrum(StateKind kind, int n_max, double lambda = -1.0, ParityConvention pc = {});
// Both kinds, sorted by energy from the deepest: xi_0, zeta_1, xi_1, zeta_2, ...
std::vector<BoundState> spectrum_interlaced(int n_max, double lambda = -1.0, ParityConvention pc = {});

// zeta_n(u) = -(u/n) e^{-|u|} L_n'(2|u|), scaled by mu on u < 0.
double regular_wavefunction(int n, double u, int mu = 1);
double regular_derivative(int n, double u, int mu = 1);

// xi_n(u) = (p_n(|u|) K0(|u|) + q_n(|u|) K1(|u|)) |u| / ((-2)^n sqrt(pi)), scaled by nu on u < 0.
// Throws domain_error at u = 0.
double anomalous_wavefunction(int n, double u, int nu = 1);
// Derivative from K0' = -K1 and (u K1)' = -u K0; diverges like log|u| at 0.
double anomalous_derivative(int n, double u, int nu = 1);
// xi_n(0+) = (2n-1)!! / ((-2)^n sqrt(pi)).
double anomalous_at_zero(int n);
// Batched evaluation for |u| grids; polynomials go through the vector Horner kernel.
std::vector<double> anomalous_on_grid(int n, const std::vector<double>& u, int nu = 1);

double wavefunction(const BoundState& s, double u);

enum class OverlapDomain { half_line, full_line };

// int psi_1(x) psi_2(x) dx with psi(x) = w(x |lambda| / scale); the variable is
// rescaled so the product decays like e^{-v} before the split quadrature.
double overlap(const BoundState& a, const BoundState& b, OverlapDomain dom, double lambda = -1.0,
               Scheme scheme = Scheme::tanh_sinh);
QuadResult overlap_detail(const BoundState& a, const BoundState& b, double lambda, Scheme scheme);

struct AnomalousNorm {
    double half_line;        // int_0^inf xi_n^2 du, quadrature
    double half_line_exact;  // same from exact K-moment formulas
    double nu_n;             // 2^{2n+1} / ((2n+1) ((2n-1)!!)^2)
    double beta;             // inverted from the quadrature norm
    double beta_exact;       // inverted from the exact norm
};
// beta_n from N = (2n+1) beta / (2^{2n+2} pi) + nu_n pi / 2^{n+3}.
AnomalousNorm anomalous_norm(int n);

// int_0^inf zeta_n(u)^2 du.
double regular_norm(int n);

// Half-line overlap of zeta_n(x/(2n)) and zeta_m(x/(2m)), |lambda| = 1.
double regular_orthogonality(int n, int m);

// 4 [xi_n' xi_p / (2n+1) - xi_n xi_p' / (2p+1)] at u = eps.
double delta_bracket(int n, int p, double eps);
struct DeltaResult {
    LimitEstimate limit;
    std::vector<std::pair<double, double>> samples;
};
// Bracket on eps = 1e-6 .. 1e-12 and the log-Richardson limit.
DeltaResult delta_np(int n, int p);

// The three printed elliptic-integral closed forms, parameter convention m = k^2.
struct EllipticForms {
    double f01, f02, f12;
};
EllipticForms elliptic_closed_forms();

} // namespace c1d
