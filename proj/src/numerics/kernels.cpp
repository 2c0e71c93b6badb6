#include "coulomb1d/numerics/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace c1d::kernels {

namespace scalar {

// Pairwise over blocks of 16 so the rounding error grows like log n.
double weighted_sum(const double* w, const double* f, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += w[i] * f[i];
        return s;
    }
    std::size_t h = n / 2;
    return weighted_sum(w, f, h) + weighted_sum(w + h, f + h, n - h);
}

void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = nc; k-- > 0;) acc = acc * x[i] + c[k];
        out[i] = acc;
    }
}

} // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {

__attribute__((target("avx2,fma"))) double weighted_sum(const double* w, const double* f,
                                                         std::size_t n) {
    __m256d a0 = _mm256_setzero_pd();
    __m256d a1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        a0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(f + i), a0);
        a1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), _mm256_loadu_pd(f + i + 4), a1);
    }
    __m256d a = _mm256_add_pd(a0, a1);
    __m128d lo = _mm256_castpd256_pd128(a);
    __m128d hi = _mm256_extractf128_pd(a, 1);
    lo = _mm_add_pd(lo, hi);
    double s = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) s += w[i] * f[i];
    return s;
}

__attribute__((target("avx2,fma"))) void horner_batch(const double* c, std::size_t nc,
                                                       const double* x, double* out,
                                                       std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_loadu_pd(x + i);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t k = nc; k-- > 0;) acc = _mm256_fmadd_pd(acc, xv, _mm256_set1_pd(c[k]));
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < n) scalar::horner_batch(c, nc, x + i, out + i, n - i);
}

} // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {

double weighted_sum(const double* w, const double* f, std::size_t n) {
    float64x2_t a0 = vdupq_n_f64(0.0);
    float64x2_t a1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a0 = vfmaq_f64(a0, vld1q_f64(w + i), vld1q_f64(f + i));
        a1 = vfmaq_f64(a1, vld1q_f64(w + i + 2), vld1q_f64(f + i + 2));
    }
    double s = vaddvq_f64(vaddq_f64(a0, a1));
    for (; i < n; ++i) s += w[i] * f[i];
    return s;
}

void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t xv = vld1q_f64(x + i);
        float64x2_t acc = vdupq_n_f64(0.0);
        for (std::size_t k = nc; k-- > 0;) acc = vfmaq_f64(vdupq_n_f64(c[k]), acc, xv);
        vst1q_f64(out + i, acc);
    }
    if (i < n) scalar::horner_batch(c, nc, x + i, out + i, n - i);
}

} // namespace neon
#endif

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

namespace {

struct Table {
    Isa isa;
    double (*wsum)(const double*, const double*, std::size_t);
    void (*horner)(const double*, std::size_t, const double*, double*, std::size_t);
};

Table select() {
    const char* force = std::getenv("COULOMB1D_FORCE_SCALAR");
    bool pin = force && std::strcmp(force, "0") != 0 && *force != '\0';
    if (!pin) {
#if defined(__x86_64__) || defined(__i386__)
        if (isa_available(Isa::avx2)) return {Isa::avx2, avx2::weighted_sum, avx2::horner_batch};
#endif
#if defined(__aarch64__)
        return {Isa::neon, neon::weighted_sum, neon::horner_batch};
#endif
    }
    return {Isa::scalar, scalar::weighted_sum, scalar::horner_batch};
}

const Table& table() {
    static const Table t = select();
    return t;
}

} // namespace

Isa active_isa() { return table().isa; }

const char* isa_name(Isa isa) {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

double weighted_sum(const double* w, const double* f, std::size_t n) {
    return table().wsum(w, f, n);
}

void horner_batch(const double* c, std::size_t nc, const double* x, double* out, std::size_t n) {
    table().horner(c, nc, x, out, n);
}

} // namespace c1d::kernels
