#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/complex.hpp"
#include "coulomb1d/numerics/extrapolate.hpp"
#include "coulomb1d/numerics/kernels.hpp"
#include "coulomb1d/numerics/precision.hpp"
#include "coulomb1d/numerics/quadrature.hpp"

using namespace c1d;

namespace {

std::vector<double> random_vec(std::size_t n, unsigned seed, double lo = -1.0, double hi = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("kernel dispatch matches the scalar reference") {
    // Lengths straddle the vector width and the unrolled tail.
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u, 1000u}) {
        auto w = random_vec(n, 11 + n), f = random_vec(n, 97 + n);
        double ref = kernels::scalar::weighted_sum(w.data(), f.data(), n);
        double mag = 0;
        for (std::size_t i = 0; i < n; ++i) mag += std::abs(w[i] * f[i]);
        CHECK(std::abs(kernels::weighted_sum(w.data(), f.data(), n) - ref) <= 1e-15 * (mag + 1));
#if defined(__x86_64__)
        if (kernels::isa_available(kernels::Isa::avx2))
            CHECK(std::abs(kernels::avx2::weighted_sum(w.data(), f.data(), n) - ref) <= 1e-15 * (mag + 1));
#endif
    }
    for (std::size_t nc : {1u, 2u, 5u, 9u}) {
        auto c = random_vec(nc, 5 + nc, -10, 10), x = random_vec(37, 3, 0, 20);
        std::vector<double> ref(x.size()), got(x.size());
        kernels::scalar::horner_batch(c.data(), nc, x.data(), ref.data(), x.size());
        kernels::horner_batch(c.data(), nc, x.data(), got.data(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            double scale = 0;
            for (std::size_t k = nc; k-- > 0;) scale = scale * x[i] + std::abs(c[k]);
            CHECK(std::abs(got[i] - ref[i]) <= 1e-15 * scale);
        }
    }
}

TEST_CASE("kernel dispatch honours the scalar override") {
    const char* env = std::getenv("COULOMB1D_FORCE_SCALAR");
    if (env && std::string(env) == "1") CHECK(kernels::active_isa() == kernels::Isa::scalar);
    CHECK(kernels::isa_available(kernels::Isa::scalar));
    CHECK(std::string(kernels::isa_name(kernels::Isa::scalar)) == "scalar");
    CHECK(kernels::isa_available(kernels::active_isa()));
}

TEST_CASE("quadrature: both schemes on smooth, log and inverse-sqrt integrands") {
    for (Scheme s : {Scheme::tanh_sinh, Scheme::gauss_kronrod}) {
        QuadratureSpec q;
        q.scheme = s;
        CHECK(integrate([](double x) { return std::exp(-x); }, q).value == doctest::Approx(1.0).epsilon(1e-12));
        q.domain = Domain::finite;
        q.lower = 0;
        q.upper = 1;
        q.singularity_hint = Singularity::log_at_zero;
        CHECK(integrate([](double x) { return std::log(x); }, q).value == doctest::Approx(-1.0).epsilon(1e-10));
        q.singularity_hint = Singularity::inv_sqrt_at_endpoint;
        CHECK(integrate([](double x) { return 1 / std::sqrt(x); }, q).value == doctest::Approx(2.0).epsilon(1e-8));
        q.domain = Domain::symmetric_interval;
        q.upper = 2;
        q.singularity_hint = Singularity::none;
        CHECK(integrate([](double x) { return x * x; }, q).value == doctest::Approx(16.0 / 3).epsilon(1e-12));
    }
}

TEST_CASE("quadrature: K0 squared over the half line") {
    // int_0^inf K0(t)^2 dt = pi^2 / 4, log-singular at 0.
    QuadratureSpec q;
    q.singularity_hint = Singularity::log_at_zero;
    auto f = [](double t) { return std::pow(std::cyl_bessel_k(0.0, t), 2); };
    double ts = integrate(f, q).value;
    q.scheme = Scheme::gauss_kronrod;
    double gk = integrate(f, q).value;
    CHECK(ts == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-11));
    CHECK(gk == doctest::Approx(M_PI * M_PI / 4).epsilon(1e-11));
}

TEST_CASE("quadrature: invalid specs are rejected") {
    QuadratureSpec q;
    q.domain = Domain::finite;
    q.lower = 1;
    q.upper = 0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, q), config_error);
    q = {};
    q.abs_tol = -1;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, q), config_error);
}

TEST_CASE("extrapolation: power model recovers an exact polynomial limit") {
    ExtrapolationSpec spec;
    spec.order = 2;
    std::vector<std::pair<double, double>> s;
    for (double e : {0.1, 0.05, 0.025, 0.0125, 0.00625}) {
        spec.grid.push_back(e);
        s.emplace_back(e, 2.0 + 3.0 * e - 7.0 * e * e);
    }
    LimitEstimate L = extrapolate_limit(s, spec);
    CHECK(L.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("extrapolation: log model removes log and e log^2 e terms") {
    ExtrapolationSpec spec;
    spec.model = ExtrapolationModel::richardson_log;
    spec.order = 4;
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i <= 8; ++i) {
        double e = std::pow(10.0, -2.0 - 0.5 * i), l = std::log(e);
        spec.grid.push_back(e);
        s.emplace_back(e, 1.5 + 0.25 * e * l * l - 0.3 * e * l + 0.7 * e);
    }
    CHECK(extrapolate_limit(s, spec).value == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("extrapolation: grids must decrease strictly") {
    ExtrapolationSpec spec;
    spec.grid = {0.1, 0.2, 0.05};
    CHECK_THROWS_AS(spec.validate(), config_error);
}

TEST_CASE("precision guard sets and restores the default") {
    unsigned before = Real::default_precision();
    {
        PrecisionGuard g(120);
        CHECK(Real::default_precision() == 120);
        Real x = lift(Real(1) / 3);
        CHECK(x.precision() == 120);
    }
    CHECK(Real::default_precision() == before);
}

TEST_CASE("precision: cap and validation") {
    CHECK_THROWS_AS(with_precision(max_digits() + 1, [](const PrecisionContext&) { return 0; }), resource_error);
    CHECK_THROWS_AS(with_precision(10, [](const PrecisionContext&) { return 0; }), config_error);
    PrecisionContext c = PrecisionContext::with_digits(40);
    CHECK(c.target_rel_err == doctest::Approx(1e-30));
    c.target_rel_err = 1e-60;
    CHECK_THROWS_AS(c.validate(), config_error);
}

TEST_CASE("escalation stops once two precisions agree") {
    auto f = [](const PrecisionContext&) { return Real(sqrt(Real(2))); };
    auto e = escalate(PrecisionContext::with_digits(30), f, [](const Real& a, const Real& b) { return rel_diff(a, b); });
    CHECK(e.achieved_digits == 30);
    CHECK(e.rel_change < 1e-20);
    // A quantity that changes with precision beyond the target forces doubling.
    int calls = 0;
    auto g = [&calls](const PrecisionContext& c) {
        ++calls;
        return Real(1 + 3 * pow(Real(10), -c.working_digits / 4));
    };
    auto eg = escalate(PrecisionContext::with_digits(20), g, [](const Real& a, const Real& b) { return rel_diff(a, b); });
    CHECK(eg.achieved_digits == 80);
    CHECK(calls == 4);
}

TEST_CASE("complex arithmetic follows std::complex") {
    using C = cx<double>;
    C a(1.5, -2.0), b(-0.25, 3.0);
    std::complex<double> sa(1.5, -2.0), sb(-0.25, 3.0);
    auto same = [](C z, std::complex<double> w) {
        CHECK(z.re == doctest::Approx(w.real()).epsilon(1e-14));
        CHECK(z.im == doctest::Approx(w.imag()).epsilon(1e-14));
    };
    same(a * b, sa * sb);
    same(a / b, sa / sb);
    same(exp(a), std::exp(sa));
    same(log(b), std::log(sb));
    same(sqrt(C(-4.0, 0.0)), std::sqrt(std::complex<double>(-4.0, 0.0)));
    same(sqrt(C(-4.0, -1e-300)), std::sqrt(std::complex<double>(-4.0, -1e-300)));
    same(tan(a), std::tan(sa));
    same(pow(a, b), std::pow(sa, sb));
    // Smith division survives magnitudes whose squares overflow.
    C big(1e300, 1e300);
    same(big / big, {1.0, 0.0});
}
