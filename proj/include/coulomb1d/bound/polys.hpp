#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "coulomb1d/numerics/precision.hpp"

namespace c1d {

using BigInt = boost::multiprecision::cpp_int;

// p_n, q_n with ascending integer coefficients:
// p_{n+1} = (2n+3) p_n + 2x (p_n' - p_n - q_n), q_{n+1} = (2n+1) q_n + 2x (q_n' - p_n - q_n).
struct PolyPair {
    int n = 0;
    std::vector<BigInt> p, q;
};

// Memoized; safe for concurrent callers. The reference stays valid for the
// lifetime of the process.
const PolyPair& poly_pair(int n);

// k!! with (-1)!! = 1.
BigInt double_factorial(int k);

std::vector<double> to_double(const std::vector<BigInt>& c);
Real eval_poly(const std::vector<BigInt>& c, const Real& x);
double eval_poly(const std::vector<BigInt>& c, double x);

// Relative residuals of the four M/U <-> Bessel identities at order n and t > 0:
//   e^{-t} M(1/2 - n, 2, 2t) (2n+1)!! = p_n(t) I0 - q_n(t) I1
//   e^{-t} U(1/2 - n, 2, 2t) = (-1)^n / (2^{n+1} sqrt(pi)) (p_n(t) K0 + q_n(t) K1)
//   e^{-t} M(3/2 + n, 2, 2t) (2n+1)!! = p_n(-t) I0 + q_n(-t) I1
//   e^{-t} U(3/2 + n, 2, 2t) = 2^n / ((2n+1)!! (2n-1)!! sqrt(pi)) (-p_n(-t) K0 + q_n(-t) K1)
// evaluated at the current default precision.
struct IdentityResiduals {
    double M_minus, U_minus, M_plus, U_plus;
};
IdentityResiduals bessel_identity_residuals(int n, const Real& t);

} // namespace c1d
