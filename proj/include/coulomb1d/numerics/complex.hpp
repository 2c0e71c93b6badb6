#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <type_traits>

#include "coulomb1d/numerics/precision.hpp"

namespace c1d {

// Minimal complex arithmetic over a real field T. std::complex is only
// specified for the built-in floating types, and MPC is not available.
template <class T>
struct cx {
    T re{};
    T im{};

    cx() = default;
    cx(T r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real promotion
    cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
    template <class U>
        requires std::is_arithmetic_v<U>
    cx(U r) : re(r), im(0) {}  // NOLINT

    cx& operator+=(const cx& o) { re += o.re; im += o.im; return *this; }
    cx& operator-=(const cx& o) { re -= o.re; im -= o.im; return *this; }
    cx& operator*=(const cx& o) {
        T r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    cx& operator/=(const cx& o) { return *this = *this / o; }
    cx& operator*=(const T& s) { re *= s; im *= s; return *this; }
    cx& operator/=(const T& s) { re /= s; im /= s; return *this; }

    friend cx operator+(cx a, const cx& b) { return a += b; }
    friend cx operator-(cx a, const cx& b) { return a -= b; }
    friend cx operator*(cx a, const cx& b) { return a *= b; }
    friend cx operator*(cx a, const T& s) { return a *= s; }
    friend cx operator*(const T& s, cx a) { return a *= s; }
    friend cx operator/(cx a, const T& s) { return a /= s; }
    friend cx operator-(const cx& a) { return cx(-a.re, -a.im); }
    friend cx operator/(const cx& a, const cx& b) {
        // Smith's algorithm keeps intermediate magnitudes bounded.
        using std::abs;
        if (abs(b.re) >= abs(b.im)) {
            T r = b.im / b.re;
            T d = b.re + b.im * r;
            return cx((a.re + a.im * r) / d, (a.im - a.re * r) / d);
        }
        T r = b.re / b.im;
        T d = b.re * r + b.im;
        return cx((a.re * r + a.im) / d, (a.im * r - a.re) / d);
    }
    friend bool operator==(const cx& a, const cx& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const cx& z) {
        return os << '(' << z.re << ',' << z.im << ')';
    }
};

template <class T> cx<T> conj(const cx<T>& z) { return cx<T>(z.re, -z.im); }
template <class T> T norm(const cx<T>& z) { return z.re * z.re + z.im * z.im; }
template <class T> T abs(const cx<T>& z) { using std::hypot; return hypot(z.re, z.im); }
template <class T> T arg(const cx<T>& z) { using std::atan2; return atan2(z.im, z.re); }
template <class T> cx<T> imag_unit() { return cx<T>(T(0), T(1)); }

template <class T>
cx<T> exp(const cx<T>& z) {
    using std::exp; using std::cos; using std::sin;
    T m = exp(z.re);
    return cx<T>(m * cos(z.im), m * sin(z.im));
}

// Principal branch: arg in (-pi, pi].
template <class T>
cx<T> log(const cx<T>& z) {
    using std::log;
    return cx<T>(log(abs(z)), arg(z));
}

template <class T>
cx<T> sqrt(const cx<T>& z) {
    using std::sqrt; using std::abs;
    if (z.re == 0 && z.im == 0) return cx<T>(T(0), T(0));
    T m = abs(z);
    T r = sqrt((m + abs(z.re)) / 2);
    if (z.re >= 0) return cx<T>(r, z.im / (2 * r));
    T i = z.im >= 0 ? r : T(-r);
    return cx<T>(abs(z.im) / (2 * r), i);
}

template <class T>
cx<T> sin(const cx<T>& z) {
    using std::sin; using std::cos; using std::sinh; using std::cosh;
    return cx<T>(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}

template <class T>
cx<T> cos(const cx<T>& z) {
    using std::sin; using std::cos; using std::sinh; using std::cosh;
    return cx<T>(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}

template <class T>
cx<T> tan(const cx<T>& z) { return sin(z) / cos(z); }

// z^w through the principal logarithm.
template <class T>
cx<T> pow(const cx<T>& z, const cx<T>& w) { return exp(w * log(z)); }

template <class T>
std::complex<double> to_std(const cx<T>& z) {
    return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

using Complex = cx<Real>;

inline Complex lift(const Complex& z) { return Complex(lift(z.re), lift(z.im)); }

} // namespace c1d
