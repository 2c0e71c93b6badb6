#include "coulomb1d/specfun/bound_series.hpp"

#include <cmath>
#include <vector>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/complex.hpp"
#include "coulomb1d/specfun/gamma.hpp"
#include "coulomb1d/specfun/hypergeometric.hpp"

namespace c1d {

namespace {

int digits_now() { return static_cast<int>(Real::default_precision()); }

bool gamma_pole(const Real& x) { return x <= 0 && x == floor(x); }

struct Sums {
    Real J, theta;
};

// sum A_k u^k and sum a_k u^k, run until both tails fall below eps.
Sums recurrence_sums(const Real& eta, const Real& u) {
    const Real eps = pow(Real(10), -(digits_now() + 2));
    // (k+1)(k+2) A_{k+2} = 2 eta A_{k+1} + A_k, A_0 = 0, A_1 = 1
    // (k+1)(k+2) a_{k+2} = 2 eta a_{k+1} + a_k - 2 eta (2k+3) A_{k+2}, a_0 = 1, a_1 = -1
    Real A0 = 0, A1 = 1, a0 = 1, a1 = -1;
    Real upow = u;  // u^{k+1}
    Real J = A1 * u, th = a0 + a1 * u;
    int quiet = 0;
    for (int k = 0; k < 200000; ++k) {
        Real d = Real(k + 1) * Real(k + 2);
        Real A2 = (2 * eta * A1 + A0) / d;
        Real a2 = (2 * eta * a1 + a0 - 2 * eta * Real(2 * k + 3) * A2) / d;
        upow *= u;
        Real tJ = A2 * upow, tt = a2 * upow;
        J += tJ;
        th += tt;
        if (abs(tJ) <= eps * abs(J) && abs(tt) <= eps * (abs(th) + abs(J))) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
        A0 = A1; A1 = A2;
        a0 = a1; a1 = a2;
    }
    return {J, th};
}

int guard_for(const Real& u) {
    return 10 + static_cast<int>(std::ceil(0.8686 * static_cast<double>(abs(u))));
}

} // namespace

Real bound_series_L(const Real& eta0, const Real& u0) {
    if (u0 == 0) throw domain_error("L_eta is singular at u = 0");
    if (gamma_pole(1 + eta0)) throw pole_error("digamma(1 + eta) has a pole: 1 + eta is a non-positive integer");
    const int base = digits_now();
    Real r;
    {
        PrecisionGuard g(base + guard_for(u0));
        Real eta = lift(eta0), u = lift(u0);
        Sums s = recurrence_sums(eta, u);
        // log(2u) -> log(-2u) on the negative half-line
        Real lg = log(2 * abs(u));
        r = 2 * eta * s.J * (lg - 1 + digamma_real(1 + eta) + 2 * euler_gamma_real()) + s.theta;
    }
    return Real(r, base);
}

std::pair<Real, Real> bound_series_JK(const Real& eta0, const Real& u0) {
    if (u0 == 0) throw domain_error("K_eta is singular at u = 0");
    if (gamma_pole(1 + eta0)) throw pole_error("digamma(1 + eta) has a pole: 1 + eta is a non-positive integer");
    const int base = digits_now();
    Real J, K;
    {
        PrecisionGuard g(base + guard_for(u0));
        Real eta = lift(eta0), u = lift(u0);
        Sums s = recurrence_sums(eta, u);
        Real lg = log(2 * abs(u));
        Real L = 2 * eta * s.J * (lg - 1 + digamma_real(1 + eta) + 2 * euler_gamma_real()) + s.theta;
        J = s.J;
        K = L / gamma_real(1 + eta);
    }
    return {Real(J, base), Real(K, base)};
}

Real bound_J_closed(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    HypValue M = hyp_M(Complex(1 + eta), Complex(Real(2)), Complex(2 * u));
    return u * exp(-u) * M.value.re;
}

Real bound_K_closed(const Real& eta0, const Real& u0) {
    Real eta = lift(eta0), u = lift(u0);
    if (!(u > 0)) throw domain_error("closed-form K_eta needs u > 0");
    HypValue U = hyp_U(Complex(1 + eta), Complex(Real(2)), Complex(2 * u));
    return 2 * u * exp(-u) * U.value.re;
}

} // namespace c1d
