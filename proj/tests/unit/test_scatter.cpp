#include <doctest.h>

#include <cmath>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/scatter/scatter.hpp"
#include "coulomb1d/specfun/gamma.hpp"

using namespace c1d;

namespace {

constexpr int kDigits = 40;

Real R(const char* s) { return lift(Real(s)); }

PrecisionContext ctx() { return PrecisionContext::with_digits(kDigits); }

TruncationConfig cut(const char* eps, TruncationForm f = TruncationForm::hole) { return {R(eps), f}; }

double crel(const Complex& a, const Complex& b) { return static_cast<double>(abs(a - b) / abs(b)); }

// Independent mpmath matching (tests/oracles/scatter_oracle.py).
struct TRef {
    const char *eta, *u, *composed, *hole, *plateau;
};
const TRef t_refs[] = {
    {"0.2", "0.1", "0.5535297329361380941104771", "0.5767206036569364527600343", "0.277763258019673593448872"},
    {"0.2", "1e-3", "0.04766926153397973596045274", "0.04758283316571256566641198", "0.03470921779300846022670708"},
    {"0.2", "1e-10", "0.003303661107907026120766502", "0.003303661105076177728858603",
     "0.003019970550917974549715901"},
    {"-1", "0.1", "0.956537609671606275511107", "0.9996429960773877023498202", "0.8564075879096032139956871"},
    {"-1", "1e-3", "0.2841504796859428936495505", "0.2869477239409587000461834", "0.2178296101834986538185927"},
    {"-1", "1e-10", "0.02180019730638966708006702", "0.02180019739826451916995668", "0.01990898396022419557347493"},
};

} // namespace

TEST_CASE("transmission probabilities match the independent matching") {
    PrecisionGuard g(kDigits);
    for (const auto& r : t_refs) {
        INFO(r.eta);
        INFO(r.u);
        ProblemParams p = ProblemParams::from_eta(R(r.eta));
        CHECK(rel_diff(norm(composed_transmission(p, cut(r.u), ctx())), R(r.composed)) < 1e-18);
        CHECK(rel_diff(symmetric_solution(p, cut(r.u), ctx()).T, R(r.hole)) < 1e-18);
        CHECK(rel_diff(plateau_transmission(p, cut(r.u, TruncationForm::plateau), ctx()), R(r.plateau)) < 1e-18);
    }
}

TEST_CASE("composed transmission equals its closed form") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.2", "-0.2", "1", "-1", "3"})
        for (const char* eps : {"0.5", "1e-2", "1e-50", "1e-400"}) {
            ProblemParams p = ProblemParams::from_eta(R(eta));
            CHECK(crel(composed_transmission(p, cut(eps), ctx()), composed_transmission_closed(p, cut(eps), ctx())) <
                  1e-30);
        }
}

TEST_CASE("half barrier and symmetric solutions conserve flux") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.2", "-0.7", "2"})
        for (const char* eps : {"0.3", "1e-5", "1e-300"}) {
            INFO(eta);
            INFO(eps);
            ProblemParams p = ProblemParams::from_eta(R(eta));
            ScatteringSolution h = half_barrier(p, cut(eps), ctx());
            CHECK(static_cast<double>(abs(h.T + h.R - 1)) < 1e-30);
            for (TruncationForm f : {TruncationForm::hole, TruncationForm::plateau}) {
                ScatteringSolution s = symmetric_solution(p, cut(eps, f), ctx());
                CHECK(static_cast<double>(abs(s.T + s.R - 1)) < 1e-30);
                // Parity symmetry locks the phases: t conj(r) is purely imaginary.
                CHECK(static_cast<double>(abs((s.t * conj(s.r)).re)) < 1e-30);
                CHECK(s_matrix(s).unitarity_defect() < 1e-12);
            }
        }
}

TEST_CASE("free propagation at eta = 0") {
    PrecisionGuard g(kDigits);
    ProblemParams p = ProblemParams::from_eta(Real(0));
    for (const char* eps : {"0.7", "1e-3"}) {
        Real u = R(eps);
        Complex e = exp(Complex(Real(0), Real(-u)));
        ScatteringSolution h = half_barrier(p, cut(eps), ctx());
        CHECK(crel(h.t, e) < 1e-35);
        CHECK(static_cast<double>(abs(h.r)) < 1e-35);
        CHECK(crel(composed_transmission(p, cut(eps), ctx()), e * e) < 1e-35);
        CHECK(static_cast<double>(abs(symmetric_solution(p, cut(eps), ctx()).T - 1)) < 1e-35);
    }
}

TEST_CASE("hole and plateau forms both drive transmission toward zero") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.2", "-0.2", "1", "-1"}) {
        ProblemParams p = ProblemParams::from_eta(R(eta));
        Real prev = 2;
        for (const char* eps : {"1e-1", "1e-10", "1e-100", "1e-1000"}) {
            Real T = norm(composed_transmission(p, cut(eps), ctx()));
            CHECK(T < prev);
            prev = T;
        }
        // Same order of magnitude from both regularizations at the smallest cutoff.
        Real Th = norm(composed_transmission(p, cut("1e-1000"), ctx()));
        Real Tp = plateau_transmission(p, cut("1e-1000", TruncationForm::plateau), ctx());
        CHECK(static_cast<double>(abs(log10(Th / Tp))) < 1);
    }
}

TEST_CASE("plateau with Maclaurin connection values at small u") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.2", "-1"}) {
        ProblemParams p = ProblemParams::from_eta(R(eta));
        auto c = cut("1e-12", TruncationForm::plateau);
        CHECK(rel_diff(plateau_transmission_taylor(p, c, ctx()), plateau_transmission(p, c, ctx())) < 1e-20);
    }
}

TEST_CASE("truncation validation") {
    PrecisionGuard g(kDigits);
    ProblemParams p = ProblemParams::from_eta(R("0.2"));
    CHECK_THROWS_AS(half_barrier(p, cut("0"), ctx()), config_error);
    CHECK_THROWS_AS(half_barrier(p, cut("0.1", TruncationForm::plateau), ctx()), config_error);
    CHECK_THROWS_AS(composed_transmission(p, cut("-1"), ctx()), config_error);
}

TEST_CASE("escalated sweep reports its own error") {
    PrecisionGuard g(kDigits);
    ProblemParams p = ProblemParams::from_eta(R("0.2"));
    SweepPoint s = transmission_escalated(p, cut("1e-3"), PrecisionContext::with_digits(30));
    CHECK(s.achieved_digits >= 30);
    CHECK(s.rel_change <= 1e-20);
    CHECK(rel_diff(s.probability, R("0.04766926153397973596045274")) < 1e-20);
}

TEST_CASE("S-matrix parametrization is unitary over a T grid") {
    for (int e : {-1, 1})
        for (int ep : {-1, 1})
            for (int i = 0; i <= 100; ++i) {
                double T = i / 100.0;
                CHECK(s_matrix(T, e, ep).unitarity_defect() < 1e-12);
            }
    SMatrix zero = s_matrix(0.0, 1, 1);
    CHECK(zero.entries[0][0] == std::complex<double>(-1.0, 0.0));
    CHECK(zero.entries[1][1] == std::complex<double>(-1.0, 0.0));
    CHECK(zero.entries[0][1] == std::complex<double>(0.0, 0.0));
    CHECK(zero.entries[1][0] == std::complex<double>(0.0, 0.0));
    SMatrix one = s_matrix(1.0, 1, -1);
    CHECK(one.entries[0][0] == std::complex<double>(0.0, 0.0));
    CHECK(one.entries[0][1] == std::complex<double>(-1.0, 0.0));
    CHECK_THROWS_AS(s_matrix(1.5, 1, 1), domain_error);
    CHECK_THROWS_AS(s_matrix(0.5, 0, 1), config_error);
}

TEST_CASE("sign extraction against the parametrization") {
    PrecisionGuard g(kDigits);
    for (int e : {-1, 1})
        for (int ep : {-1, 1}) {
            Real T = R("0.3"), s = sqrt(T * (1 - T));
            Complex t(Real(ep * T), Real(e * s));
            Complex r(Real(T - 1), Real(e * ep * s));
            ScatteringSolution sol = ScatteringSolution::from_amplitudes(t, r);
            // t/|t| = i eps r/|r| carries the opposite sign to the parametrization's eps.
            CHECK(sol.eps_sign == -e);
            CHECK(sol.epsprime_sign == ep);
        }
}

TEST_CASE("connection coefficients: (t, r) and (T, eps, eps') routes coincide") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.3", "-1.1"})
        for (int e : {-1, 1})
            for (int ep : {-1, 1}) {
                Real T = R("0.64"), s = sqrt(T * (1 - T));
                Complex t(Real(ep * T), Real(e * s));
                Complex r = Real(ep) * t - Complex(Real(1));
                ScatteringSolution sol = ScatteringSolution::from_amplitudes(t, r);
                for (Side side : {Side::L, Side::R}) {
                    ConnectionCoefficients a = coefficients_from_t_r(sol, side, R(eta));
                    ConnectionCoefficients b = coefficients_from_T(T, e, ep, side, R(eta));
                    CHECK(crel(a.A, b.A) < 1e-35);
                    CHECK(crel(a.B, b.B) < 1e-35);
                    CHECK(crel(a.a, b.a) < 1e-35);
                    CHECK(crel(a.b, b.b) < 1e-35);
                    // B = eps' e^{-pi eta} b
                    Complex rhs = Real(ep) * exp(-pi_real() * R(eta)) * b.b;
                    CHECK(crel(b.B, rhs) < 1e-35);
                }
            }
}

TEST_CASE("WKB exponent and the R -> 0 breakdown") {
    PrecisionGuard g(kDigits);
    double prev_T = 1;
    for (double Rc : {1e-2, 1e-4, 1e-6, 1e-8}) {
        WkbResult w = wkb_gamow(0.5, 1.0, 0.25, Rc, ctx());
        CHECK(w.lambda_G == doctest::Approx(w.lambda_G_closed).epsilon(1e-10));
        CHECK(w.lambda_R == doctest::Approx(w.lambda_R_closed).epsilon(1e-10));
        CHECK(w.P >= std::exp(-2 * M_PI * w.eta));
        CHECK(w.exact_T < prev_T);
        prev_T = w.exact_T;
    }
    CHECK_THROWS_AS(wkb_gamow(0.5, 1.0, 0.25, 10.0, ctx()), domain_error);
    CHECK_THROWS_AS(wkb_gamow(0.5, -1.0, 0.25, 1e-3, ctx()), domain_error);
}
