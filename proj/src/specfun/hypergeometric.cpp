#include "coulomb1d/specfun/hypergeometric.hpp"

#include <algorithm>
#include <cmath>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/specfun/gamma.hpp"

namespace c1d {

namespace {

constexpr int kMaxTerms = 200000;

int digits_now() { return static_cast<int>(Real::default_precision()); }

Real eps_at(int digits) { return pow(Real(10), -digits); }

Complex at_digits(const Complex& z, int digits) { return Complex(Real(z.re, digits), Real(z.im, digits)); }

HypValue round_to(const HypValue& v, int digits) {
    return {at_digits(v.value, digits), at_digits(v.derivative, digits), v.regime};
}

bool on_cut(const Complex& z) { return z.im == 0 && z.re < 0; }

Complex log_sided(const Complex& z, CutSide side) {
    if (on_cut(z)) {
        if (side == CutSide::none) throw branch_error("U evaluated on its branch cut without a side selector");
        Real m = log(-z.re);
        return Complex(m, side == CutSide::above ? pi_real() : Real(-pi_real()));
    }
    return log(z);
}

// Digits lost to cancellation when summing a series whose terms peak near e^{|z|}.
int guard_digits(const Complex& z) {
    double mz = static_cast<double>(abs(z));
    return 10 + static_cast<int>(std::ceil(mz * 0.4342944819032518));
}

} // namespace

Real asymptotic_radius(const Real& a_mag, int digits) {
    Real r1 = 30;
    Real r2 = 10 * (1 + a_mag) * (1 + a_mag);
    Real r3 = Real(1.15 * digits * 2.302585092994046);
    return std::max(r1, std::max(r2, r3));
}

HypValue hyp_M_series(const Complex& a0, const Complex& b0, const Complex& z0) {
    const int base = digits_now();
    HypValue out;
    {
        PrecisionGuard guard(base + guard_digits(z0));
        Complex a = lift(a0), b = lift(b0), z = lift(z0);
        const Real eps = eps_at(base + 2);
        // term_k = (a)_k / ((b)_k k!) z^k; derivative sums k term_k / z.
        Complex term(Real(1)), sum(Real(1)), dsum(Real(0));
        int quiet = 0;
        for (int k = 0; k < kMaxTerms; ++k) {
            Real kk = k;
            term = term * (a + Complex(kk)) / ((b + Complex(kk)) * Real(k + 1)) * z;
            sum += term;
            // d/dz of term_{k+1} z^{k+1}-form: (k+1) term / z, accumulated without dividing by z.
            dsum += term * Real(k + 1);
            Real mag = abs(term);
            if (mag <= eps * abs(sum) && abs(term * Real(k + 1)) <= eps * (abs(dsum) + abs(sum))) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
            if (k == kMaxTerms - 1) throw convergence_error("M series did not converge");
        }
        Complex deriv = (z.re == 0 && z.im == 0) ? a / b : dsum / z;
        out = {sum, deriv, HypRegime::series};
    }
    return round_to(out, base);
}

HypValue hyp_U_asymptotic(const Complex& a0, const Complex& b0, const Complex& z0, CutSide side) {
    const int base = digits_now();
    HypValue out;
    {
        PrecisionGuard guard(base + 10);
        Complex a = lift(a0), b = lift(b0), z = lift(z0);
        const Real eps = eps_at(base + 2);
        Complex lz = log_sided(z, side);
        Complex za = exp(-a * lz);  // z^{-a}
        Complex mzinv = Complex(Real(-1)) / z;  // (-z)^{-1}
        Complex c = a - b + Complex(Real(1));
        Complex term(Real(1)), sum(Real(1));
        Complex dsum = -a;  // coefficient of z^{-a-1}: sum_s t_s (-a - s) z^{-s}
        Real last = abs(term);
        bool converged = false;
        for (int s = 0; s < kMaxTerms; ++s) {
            Real ss = s;
            term = term * (a + Complex(ss)) * (c + Complex(ss)) / Real(s + 1) * mzinv;
            Real mag = abs(term);
            if (mag > last && s > 2) break;  // past the least term
            sum += term;
            dsum += term * (-a - Complex(Real(s + 1)));
            last = mag;
            if (mag <= eps * abs(sum)) {
                converged = true;
                break;
            }
        }
        if (!converged) throw convergence_error("U asymptotic series reached its least term before the target");
        out = {za * sum, za * dsum / z, HypRegime::asymptotic};
    }
    return round_to(out, base);
}

HypValue hyp_zU_log_series(const Complex& a0, const Complex& z0, CutSide side) {
    const int base = digits_now();
    if (z0.re == 0 && z0.im == 0) throw domain_error("U(a, 2, z) is singular at z = 0");
    HypValue out;
    {
        PrecisionGuard guard(base + guard_digits(z0));
        Complex a = lift(a0), z = lift(z0);
        const Real eps = eps_at(base + 2);
        const Complex one(Real(1));
        bool a_pole = (a.im == 0 && a.re <= 0 && a.re == floor(a.re));
        if (a_pole) throw pole_error("log-case U needs a not in {0, -1, ...}");
        Complex lz = log_sided(z, side);
        Complex ra1 = rgamma_complex(a - one);
        Complex ra = rgamma_complex(a);
        // z U = (1/Gamma(a-1)) sum c_k z^{k+1} [log z + psi(a+k) - psi(1+k) - psi(2+k)] + 1/Gamma(a)
        // with c_k = (a)_k / ((2)_k k!); the 1/z pole is absorbed so tiny z loses nothing.
        Real gam = euler_gamma_real();
        Complex psi_a = digamma_complex(a);
        Real h1 = 0;  // H_k
        Real h2 = 1;  // H_{k+1}
        Complex c = z;  // c_k z^{k+1}
        Complex sum(Real(0)), dsum(Real(0));
        int quiet = 0;
        for (int k = 0; k < kMaxTerms; ++k) {
            Complex bracket = lz + psi_a + Complex(Real(2 * gam - h1 - h2));
            Complex t = c * bracket;
            sum += t;
            // d/dz [c_k z^{k+1} (log z + d_k)] = c_k z^k ((k+1)(log z + d_k) + 1)
            Complex dt = c / z * (bracket * Real(k + 1) + one);
            dsum += dt;
            if (abs(t) + abs(c) <= eps * (abs(sum) + abs(ra)) && abs(dt) <= eps * (abs(dsum) + Real(1))) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
            Real k1 = k + 1;
            c = c * (a + Complex(Real(k))) / (Real(k + 2) * k1) * z;
            psi_a += one / (a + Complex(Real(k)));
            h1 += 1 / k1;
            h2 += 1 / Real(k + 2);
            if (k == kMaxTerms - 1) throw convergence_error("log-case U series did not converge");
        }
        out = {ra1 * sum + ra, ra1 * dsum, HypRegime::series};
    }
    return round_to(out, base);
}

HypValue hyp_U_log_series(const Complex& a, const Complex& z, CutSide side) {
    HypValue v = hyp_zU_log_series(a, z, side);
    Complex zinv = Complex(Real(1)) / lift(z);
    Complex u = v.value * zinv;
    return {u, (v.derivative - u) * zinv, HypRegime::series};
}

HypValue hyp_M_asymptotic(const Complex& a0, const Complex& b0, const Complex& z0) {
    const int base = digits_now();
    HypValue out;
    {
        PrecisionGuard guard(base + 10);
        Complex a = lift(a0), b = lift(b0), z = lift(z0);
        const Complex i = imag_unit<Real>();
        const Real pi = pi_real();
        // M/Gamma(b) = e^{-+ i pi a} U(a,b,z)/Gamma(b-a) + e^{+- i pi (b-a)} e^z U(b-a,b,e^{+- i pi} z)/Gamma(a)
        // with the sign that keeps e^{+- i pi} z on the principal sheet.
        Real sgn = (z.im >= 0) ? Real(-1) : Real(1);
        CutSide side = (z.im >= 0) ? CutSide::below : CutSide::above;
        Complex bma = b - a;
        HypValue u1 = hyp_U_asymptotic(a, b, z);
        HypValue u2 = hyp_U_asymptotic(bma, b, -z, side);
        Complex e1 = exp(-sgn * pi * i * a);
        Complex e2 = exp(sgn * pi * i * bma);
        Complex ez = exp(z);
        Complex gb = gamma_complex(b);
        Complex r1 = rgamma_complex(bma), r2 = rgamma_complex(a);
        Complex val = gb * (e1 * r1 * u1.value + e2 * r2 * ez * u2.value);
        Complex der = gb * (e1 * r1 * u1.derivative + e2 * r2 * ez * (u2.value - u2.derivative));
        out = {val, der, HypRegime::asymptotic};
    }
    return round_to(out, base);
}

HypValue hyp_M(const Complex& a, const Complex& b, const Complex& z) {
    if (b.im == 0 && b.re <= 0 && b.re == floor(b.re)) throw domain_error("M(a, b, z) needs b not in {0, -1, ...}");
    Real amag = std::max(abs(a - Complex(Real(1))), abs(b - a - Complex(Real(1))));
    if (abs(z) > asymptotic_radius(amag, digits_now())) {
        try {
            return hyp_M_asymptotic(a, b, z);
        } catch (const convergence_error&) {
            // fall through to the series with guard digits
        }
    }
    return hyp_M_series(a, b, z);
}

HypValue hyp_U(const Complex& a, const Complex& b, const Complex& z, CutSide side) {
    if (z.re == 0 && z.im == 0) throw domain_error("U(a, b, z) is singular at z = 0");
    if (on_cut(z) && side == CutSide::none) throw branch_error("U evaluated on its branch cut without a side selector");
    Real amag = std::max(abs(a - Complex(Real(1))), abs(b - a - Complex(Real(1))));
    bool b_is_two = (b.im == 0 && b.re == 2);
    if (abs(z) > asymptotic_radius(amag, digits_now()) || !b_is_two) {
        try {
            return hyp_U_asymptotic(a, b, z, side);
        } catch (const convergence_error&) {
            if (!b_is_two) throw;
        }
    }
    return hyp_U_log_series(a, z, side);
}

} // namespace c1d
