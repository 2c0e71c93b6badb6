#pragma once

#include <optional>
#include <utility>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/precision.hpp"

namespace c1d {

enum class SpecialKind { I0, I1, K0, K1, laguerre, elliptic_K, elliptic_E };

// Power-series Bessel functions at the current default precision, with
// guard digits against the e^{2t} cancellation in K.
Real bessel_I0(const Real& t);
Real bessel_I1(const Real& t);
Real bessel_K0(const Real& t);
Real bessel_K1(const Real& t);

// Double-precision hot path for the bound-state quadratures.
double bessel_K0(double t);
double bessel_K1(double t);

// L_n(x) and L'_n(x), using L'_n = -L^{(1)}_{n-1}.
template <class T>
std::pair<T, T> laguerre(int n, const T& x) {
    if (n < 0) throw domain_error("Laguerre order must be >= 0");
    if (n == 0) return {T(1), T(0)};
    T p = 1, q = 1 - x;
    for (int m = 1; m < n; ++m) {
        T r = ((2 * m + 1 - x) * q - m * p) / (m + 1);
        p = q;
        q = r;
    }
    T g0 = 1, g1 = 2 - x;
    for (int m = 1; m < n - 1; ++m) {
        T r = ((2 * m + 2 - x) * g1 - (m + 1) * g0) / (m + 1);
        g0 = g1;
        g1 = r;
    }
    return {q, n == 1 ? T(-g0) : T(-g1)};
}

// Complete elliptic integrals in the parameter convention m = k^2, valid for
// every m < 1 (negative m included). Throws domain_error for m >= 1.
Real elliptic_K(const Real& m);
Real elliptic_E(const Real& m);
double elliptic_K(double m);
double elliptic_E(double m);

// Dispatcher matching the kind/arg/n signature; laguerre returns (L_n, L'_n),
// every other kind returns (value, 0).
std::pair<Real, Real> bessel_and_friends(SpecialKind kind, const Real& arg, std::optional<int> n = {});

} // namespace c1d
