#include "coulomb1d/specfun/gamma.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "coulomb1d/errors.hpp"

namespace c1d {

namespace {

int digits_now() { return static_cast<int>(Real::default_precision()); }

Real eps_now() {
    Real e = 10;
    return pow(e, -digits_now());
}

// Shift target: the Stirling remainder near |z| = r behaves like e^{-2 pi r}.
Real shift_radius() { return Real(0.4 * digits_now() + 6); }

bool is_nonpositive_integer(const Complex& z) {
    if (z.im != 0) return false;
    if (z.re > 0) return false;
    return z.re == floor(z.re);
}

// lnGamma(w) by Stirling for |w| >= shift_radius().
Complex stirling(const Complex& w) {
    const Real eps = eps_now();
    Complex lw = log(w);
    Complex s = (w - Real(0.5)) * lw - w + Real(0.5) * log(2 * pi_real());
    Complex winv = Real(1) / w;
    Complex winv2 = winv * winv;
    Complex pw = winv;
    Real last = -1;
    for (int k = 1; k < 100000; ++k) {
        Real b = boost::math::bernoulli_b2n<Real>(k);
        Complex term = pw * (b / (Real(2 * k) * Real(2 * k - 1)));
        Real mag = abs(term);
        s += term;
        if (mag <= eps * abs(s)) break;
        if (last >= 0 && mag > last) throw convergence_error("Stirling series diverged before reaching target");
        last = mag;
        pw *= winv2;
    }
    return s;
}

// psi(w) asymptotic for large |w|.
Complex digamma_asym(const Complex& w) {
    const Real eps = eps_now();
    Complex winv = Real(1) / w;
    Complex winv2 = winv * winv;
    Complex s = log(w) - Real(0.5) * winv;
    Complex pw = winv2;
    Real last = -1;
    for (int k = 1; k < 100000; ++k) {
        Real b = boost::math::bernoulli_b2n<Real>(k);
        Complex term = pw * (b / Real(2 * k));
        Real mag = abs(term);
        s -= term;
        if (mag <= eps * abs(s)) break;
        if (last >= 0 && mag > last) throw convergence_error("digamma series diverged before reaching target");
        last = mag;
        pw *= winv2;
    }
    return s;
}

} // namespace

Real pi_real() {
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real euler_gamma_real() {
    Real g;
    mpfr_const_euler(g.backend().data(), MPFR_RNDN);
    return g;
}

Complex lgamma_complex(const Complex& z0) {
    Complex z = lift(z0);
    if (z.re < Real(0.5)) throw domain_error("lgamma_complex requires Re z >= 1/2");
    // lnGamma(z) = lnGamma(z + N) - sum_k log(z + k)
    const Real r = shift_radius();
    Complex acc(Real(0), Real(0));
    Complex w = z;
    while (abs(w) < r) {
        acc += log(w);
        w += Complex(Real(1));
    }
    return stirling(w) - acc;
}

Complex gamma_complex(const Complex& z0) {
    Complex z = lift(z0);
    if (is_nonpositive_integer(z)) throw pole_error("Gamma pole at a non-positive integer");
    if (z.re < Real(0.5)) {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        Complex s = sin(pi_real() * z);
        return Complex(pi_real()) / (s * gamma_complex(Complex(Real(1)) - z));
    }
    // Product form keeps the shift exact instead of summing logs.
    const Real r = shift_radius();
    Complex prod(Real(1));
    Complex w = z;
    while (abs(w) < r) {
        prod *= w;
        w += Complex(Real(1));
    }
    return exp(stirling(w)) / prod;
}

Complex rgamma_complex(const Complex& z) {
    if (is_nonpositive_integer(lift(z))) return Complex(Real(0));
    return Complex(Real(1)) / gamma_complex(z);
}

Complex digamma_complex(const Complex& z0) {
    Complex z = lift(z0);
    if (is_nonpositive_integer(z)) throw pole_error("digamma pole at a non-positive integer");
    if (z.re < Real(0.5)) {
        // psi(z) = psi(1 - z) - pi cot(pi z)
        Complex pz = pi_real() * z;
        return digamma_complex(Complex(Real(1)) - z) - pi_real() * cos(pz) / sin(pz);
    }
    const Real r = shift_radius();
    Complex acc(Real(0));
    Complex w = z;
    while (abs(w) < r) {
        acc += Complex(Real(1)) / w;
        w += Complex(Real(1));
    }
    return digamma_asym(w) - acc;
}

Real gamma_real(const Real& x) { return gamma_complex(Complex(x)).re; }

Real digamma_real(const Real& x) { return digamma_complex(Complex(x)).re; }

} // namespace c1d
