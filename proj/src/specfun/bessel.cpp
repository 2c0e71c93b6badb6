#include "coulomb1d/specfun/bessel.hpp"

#include <cmath>
#include <numbers>

#include "coulomb1d/specfun/gamma.hpp"

namespace c1d {

namespace {

int digits_now() { return static_cast<int>(Real::default_precision()); }

int guard_for(const Real& t) {
    return 10 + static_cast<int>(std::ceil(0.8686 * static_cast<double>(abs(t))));
}

void require_positive(const Real& t, const char* what) {
    if (!(t > 0)) throw domain_error(std::string(what) + " needs a positive argument");
}

// sum_k (t^2/4)^k / (k! (k+nu)!) * w_k, where w_k is supplied per term.
template <class W>
Real bessel_sum(const Real& t, int nu, W&& weight) {
    const Real eps = pow(Real(10), -(digits_now() + 2));
    Real q = t * t / 4;
    Real term = 1;
    for (int j = 1; j <= nu; ++j) term /= j;
    Real sum = term * weight(0);
    for (int k = 1; k < 100000; ++k) {
        term *= q / (Real(k) * Real(k + nu));
        Real add = term * weight(k);
        sum += add;
        if (abs(add) <= eps * abs(sum) && term <= eps * abs(sum)) break;
    }
    return sum;
}

} // namespace

Real bessel_I0(const Real& t0) {
    const int base = digits_now();
    Real r;
    {
        PrecisionGuard g(base + 10);
        Real t = lift(t0);
        r = bessel_sum(t, 0, [](int) { return Real(1); });
    }
    return Real(r, base);
}

Real bessel_I1(const Real& t0) {
    const int base = digits_now();
    Real r;
    {
        PrecisionGuard g(base + 10);
        Real t = lift(t0);
        r = t / 2 * bessel_sum(t, 1, [](int) { return Real(1); });
    }
    return Real(r, base);
}

Real bessel_K0(const Real& t0) {
    require_positive(t0, "K0");
    const int base = digits_now();
    Real r;
    {
        PrecisionGuard g(base + guard_for(t0));
        Real t = lift(t0);
        // K0 = -(log(t/2) + gamma) I0 + sum (t^2/4)^k/(k!)^2 H_k
        Real h = 0;
        int last = 0;
        Real s = bessel_sum(t, 0, [&](int k) {
            for (; last < k;) h += Real(1) / ++last;
            return h;
        });
        Real i0 = bessel_sum(t, 0, [](int) { return Real(1); });
        r = -(log(t / 2) + euler_gamma_real()) * i0 + s;
    }
    return Real(r, base);
}

Real bessel_K1(const Real& t0) {
    require_positive(t0, "K1");
    const int base = digits_now();
    Real r;
    {
        PrecisionGuard g(base + guard_for(t0));
        Real t = lift(t0);
        Real gam = euler_gamma_real();
        // K1 = 1/t + log(t/2) I1 - (t/4) sum (psi(k+1) + psi(k+2)) (t^2/4)^k/(k!(k+1)!)
        Real h = 0;
        int last = 0;
        Real s = bessel_sum(t, 1, [&](int k) {
            for (; last < k;) h += Real(1) / ++last;
            return Real(-2 * gam + 2 * h + Real(1) / (k + 1));
        });
        Real i1 = t / 2 * bessel_sum(t, 1, [](int) { return Real(1); });
        r = 1 / t + log(t / 2) * i1 - t / 4 * s;
    }
    return Real(r, base);
}

// K0, K1 are below the smallest normal double beyond this argument.
constexpr double kUnderflowArg = 700.0;

double bessel_K0(double t) {
    if (!(t > 0)) throw domain_error("K0 needs a positive argument");
    if (t > kUnderflowArg) return 0.0;
    return std::cyl_bessel_k(0.0, t);
}

double bessel_K1(double t) {
    if (!(t > 0)) throw domain_error("K1 needs a positive argument");
    if (t > kUnderflowArg) return 0.0;
    return std::cyl_bessel_k(1.0, t);
}

namespace {

// AGM with c_n^2 tracked directly so m < 0 needs no imaginary modulus.
template <class T>
std::pair<T, T> agm_KE(const T& m, const T& pi, const T& eps) {
    using std::abs; using std::sqrt;
    if (!(m < 1)) throw domain_error("complete elliptic integrals need m < 1");
    T a = 1, b = sqrt(1 - m);
    T c2 = m;
    T sum = c2 / 2;
    T pow2 = 1;
    for (int n = 0; n < 200; ++n) {
        T an = (a + b) / 2;
        T bn = sqrt(a * b);
        T cn = (a - b) / 2;
        a = an;
        b = bn;
        sum += pow2 * cn * cn;
        pow2 *= 2;
        if (abs(cn) <= eps * abs(a)) break;
    }
    T K = pi / (2 * a);
    return {K, K * (1 - sum)};
}

} // namespace

Real elliptic_K(const Real& m) {
    return agm_KE(lift(m), pi_real(), pow(Real(10), -(digits_now() + 2))).first;
}

Real elliptic_E(const Real& m) {
    return agm_KE(lift(m), pi_real(), pow(Real(10), -(digits_now() + 2))).second;
}

double elliptic_K(double m) { return agm_KE(m, std::numbers::pi, 1e-17).first; }
double elliptic_E(double m) { return agm_KE(m, std::numbers::pi, 1e-17).second; }

std::pair<Real, Real> bessel_and_friends(SpecialKind kind, const Real& arg, std::optional<int> n) {
    switch (kind) {
    case SpecialKind::I0: return {bessel_I0(arg), Real(0)};
    case SpecialKind::I1: return {bessel_I1(arg), Real(0)};
    case SpecialKind::K0: return {bessel_K0(arg), Real(0)};
    case SpecialKind::K1: return {bessel_K1(arg), Real(0)};
    case SpecialKind::laguerre:
        if (!n) throw config_error("laguerre needs an order n");
        return laguerre<Real>(*n, lift(arg));
    case SpecialKind::elliptic_K: return {elliptic_K(arg), Real(0)};
    case SpecialKind::elliptic_E: return {elliptic_E(arg), Real(0)};
    }
    throw config_error("unknown special function kind");
}

} // namespace c1d
