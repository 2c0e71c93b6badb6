#pragma once

#include <cstddef>

// Double-precision hot loops with a scalar reference and vector variants.
// The vector paths reassociate sums, so they match the reference only to
// rounding, never bitwise.
namespace c1d::kernels {

enum class Isa { scalar, avx2, neon };

// ISA chosen at first use; COULOMB1D_FORCE_SCALAR=1 pins the reference path.
Isa active_isa();
const char* isa_name(Isa isa);
bool isa_available(Isa isa);

// sum_i w[i] * f[i]
double weighted_sum(const double* w, const double* f, std::size_t n);

// out[i] = sum_k c[k] x[i]^k, coefficients in ascending powers.
void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);

namespace scalar {
double weighted_sum(const double* w, const double* f, std::size_t n);
void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
double weighted_sum(const double* w, const double* f, std::size_t n);
void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);
} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double weighted_sum(const double* w, const double* f, std::size_t n);
void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n);
} // namespace neon
#endif

} // namespace c1d::kernels
