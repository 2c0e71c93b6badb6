#pragma once

#include "coulomb1d/numerics/complex.hpp"

// Complex Gamma family at the current default mpfr precision.
namespace c1d {

// Throws pole_error for z in {0, -1, -2, ...}.
Complex gamma_complex(const Complex& z);
Complex rgamma_complex(const Complex& z);  // 1/Gamma, zero at the poles

// Continuous branch on Re z > 0 (sum of principal logs after shifting).
// Requires Re z >= 1/2.
Complex lgamma_complex(const Complex& z);

Complex digamma_complex(const Complex& z);

Real gamma_real(const Real& x);
Real digamma_real(const Real& x);

Real pi_real();
Real euler_gamma_real();

} // namespace c1d
