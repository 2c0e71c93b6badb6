#include <doctest.h>

#include <cmath>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/specfun/bessel.hpp"
#include "coulomb1d/specfun/bound_series.hpp"
#include "coulomb1d/specfun/coulomb.hpp"
#include "coulomb1d/specfun/gamma.hpp"
#include "coulomb1d/specfun/hypergeometric.hpp"

using namespace c1d;

namespace {

constexpr int kDigits = 40;

Real R(const char* s) { return lift(Real(s)); }

double rel(const Real& a, const Real& b) { return rel_diff(a, b); }

double crel(const Complex& a, const Complex& b) { return static_cast<double>(abs(a - b) / abs(b)); }

// Frozen mpmath values at 40 digits (tests/oracles/specfun_oracle.py).
struct FGRef {
    const char *eta, *u, *F, *G, *dF, *dG;
};
const FGRef fg_refs[] = {
    {"0.5", "1", "0.516601500314181575102052347221", "1.19748697079848554628946225005",
     "0.592924555360720775824066597888", "-0.561323515538948352633314954546"},
    {"0.5", "2", "1.02112022429570364990556047889", "0.532211205907791232205203145551",
     "0.329602426633785600392109368649", "-0.807526748987698114399430408914"},
    {"-0.3", "0.7", "0.767160619217153048720403187065", "0.428491901060977831063788775254",
     "0.638880876441262982280081909332", "-0.946665796588039115547895443786"},
    {"2", "5", "1.14333739242776751734547959851", "0.794445470641851350905374941805",
     "0.293796037528960487918894542408", "-0.670488933336469220071020618226"},
    {"0.3", "12", "-1.00689343837710730117992764608", "-0.109746831762738391223073850671",
     "-0.105886902240949210945677621018", "0.98161256224584885619947706438"},
};

} // namespace

TEST_CASE("Coulomb F, G and derivatives match frozen references") {
    PrecisionGuard g(kDigits);
    for (const auto& r : fg_refs) {
        INFO(r.eta);
        INFO(r.u);
        WaveEval w = coulomb_FG(R(r.eta), R(r.u));
        CHECK(rel(w.f, R(r.F)) < 1e-25);
        CHECK(rel(w.g, R(r.G)) < 1e-25);
        CHECK(rel(w.df, R(r.dF)) < 1e-25);
        CHECK(rel(w.dg, R(r.dG)) < 1e-25);
    }
}

TEST_CASE("basic solutions on u < 0 continue F_{-eta}, Re G_{-eta}") {
    PrecisionGuard g(kDigits);
    ProblemParams p = ProblemParams::from_eta(R("0.5"));
    WaveEval w = coulomb_eval(p, R("-1"), PrecisionContext::with_digits(kDigits));
    // mpmath coulombf(0, -0.5, -1) and Re coulombg(0, -0.5, -1).
    CHECK(rel(w.f, R("-2.4850998322341354737893431465")) < 1e-25);
    CHECK(rel(w.g, R("0.248933084175146372142171087892")) < 1e-25);
}

TEST_CASE("Wronskian f' g - f g' = 1 across regimes and signs") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0", "0.2", "-0.7", "1.5", "-3"})
        for (const char* u : {"1e-30", "1e-3", "0.5", "3", "17", "45", "120"}) {
            INFO(eta);
            INFO(u);
            WaveEval w = coulomb_FG(R(eta), R(u));
            CHECK(static_cast<double>(abs(w.df * w.g - w.f * w.dg - 1)) < 1e-28);
        }
}

TEST_CASE("series and asymptotic regimes agree where both converge") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.3", "-0.3", "1"}) {
        WaveEval s = coulomb_FG_series(R(eta), R("70"));
        WaveEval a = coulomb_FG_asymptotic(R(eta), R("70"));
        CHECK(rel(s.f, a.f) < 1e-30);
        CHECK(rel(s.g, a.g) < 1e-30);
        CHECK(rel(s.dg, a.dg) < 1e-30);
    }
}

TEST_CASE("derivatives agree with central differences") {
    PrecisionGuard g(60);
    Real h = lift(Real("1e-15"));
    for (const char* eta : {"0.4", "-1.2"})
        for (const char* u : {"0.3", "4", "-2.5"}) {
            INFO(eta);
            INFO(u);
            ProblemParams p = ProblemParams::from_eta(R(eta));
            PrecisionContext c = PrecisionContext::with_digits(60);
            WaveEval w = coulomb_eval(p, R(u), c);
            WaveEval wp = coulomb_eval(p, R(u) + h, c), wm = coulomb_eval(p, R(u) - h, c);
            CHECK(rel((wp.f - wm.f) / (2 * h), w.df) < 1e-25);
            CHECK(rel((wp.g - wm.g) / (2 * h), w.dg) < 1e-25);
        }
}

TEST_CASE("small-u expansion tracks the full solution") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"0.2", "-1"}) {
        Real u = R("1e-8");
        WaveEval w = coulomb_FG(R(eta), u);
        MaclaurinEval m = coulomb_maclaurin(R(eta), u);
        CHECK(rel(m.f, w.f) < 1e-15);
        CHECK(rel(m.g, w.g) < 1e-15);
        CHECK(rel(m.dg, w.dg) < 1e-13);
    }
}

TEST_CASE("large-|u| forms at u = -50 with the next-order residual") {
    PrecisionGuard g(kDigits);
    Real eta = R("0.3"), u = R("-50");
    WaveEval w = coulomb_FG(eta, u);
    double e1 = rel(coulomb_asymptotic(eta, u, 1).f, w.f);
    double e2 = rel(coulomb_asymptotic(eta, u, 2).f, w.f);
    CHECK(e1 < 1e-3);
    CHECK(e2 < e1);
}

TEST_CASE("Coulomb constants") {
    PrecisionGuard g(kDigits);
    for (const char* s : {"0.1", "1", "2.5"}) {
        Real eta = R(s);
        CHECK(rel(coulomb_p(eta), coulomb_p(Real(-eta))) < 1e-35);
        // |Gamma(1 + i eta)|^2 = pi eta / sinh(pi eta)
        Real g2 = norm(gamma_complex(Complex(Real(1), eta)));
        CHECK(rel(g2, pi_real() * eta / sinh(pi_real() * eta)) < 1e-35);
        // C_eta^2 = 2 pi eta / (e^{2 pi eta} - 1)
        Real c = coulomb_C(eta);
        CHECK(rel(c * c, 2 * pi_real() * eta / (exp(2 * pi_real() * eta) - 1)) < 1e-35);
    }
    CHECK(rel(coulomb_C(Real(0)), Real(1)) == 0.0);
}

TEST_CASE("printed G combination is only a diagnostic") {
    PrecisionGuard g(kDigits);
    Complex z = g_printed_combination(R("0.5"), R("1"));
    CHECK(static_cast<double>(abs(z.im)) > 1e-3);
}

TEST_CASE("complex Gamma against references and the reflection formula") {
    PrecisionGuard g(kDigits);
    struct Ref {
        const char *re, *im, *gre, *gim;
    };
    for (const Ref& r : {Ref{"0.5", "1.5", "0.154430976186962843403947752028", "-0.180527563373728539471520410134"},
                         Ref{"-2.3", "0.7", "-0.0622750720136883463791160883403", "-0.274869820381396768648012302722"},
                         Ref{"3", "-4", "0.0052255384713692141947315103561", "0.17254707929430018771913090143"}}) {
        Complex z(R(r.re), R(r.im));
        CHECK(crel(gamma_complex(z), Complex(R(r.gre), R(r.gim))) < 1e-28);
        Complex lhs = gamma_complex(z) * gamma_complex(Complex(Real(1)) - z);
        Complex rhs = Complex(pi_real()) / sin(Complex(pi_real()) * z);
        CHECK(crel(lhs, rhs) < 1e-30);
    }
    CHECK_THROWS_AS(gamma_complex(Complex(Real(-2))), pole_error);
    CHECK(static_cast<double>(abs(rgamma_complex(Complex(Real(-3))))) == 0.0);
    for (double x : {0.3, 1.7, 6.5})
        CHECK(static_cast<double>(gamma_real(lift(Real(x)))) == doctest::Approx(std::tgamma(x)).epsilon(1e-15));
}

TEST_CASE("Kummer M and Tricomi U against references") {
    PrecisionGuard g(kDigits);
    Complex a(Real(1), R("-0.4")), b(Real(2));
    struct Ref {
        const char *zr, *zi, *mr, *mi, *ur, *ui;
    };
    for (const Ref& r :
         {Ref{"0", "0.8", "1.04942715477787666913064905716", "0.443690684599769549791080256593",
              "0.0411144240263148969824505697265", "-0.956929972605368179898756838928"},
          Ref{"0", "6", "-0.653804325053723105201464772086", "0.0931975463834196682834788911754",
              "0.0616918062501274748682696616364", "-0.0729687405824866013568885557404"},
          Ref{"1.5", "-0.5", "1.741985258472689626863277063", "-1.22155692864340576866770762029",
              "0.559991774196196214487162639046", "0.459150272087962075157847722263"}}) {
        Complex z(R(r.zr), R(r.zi));
        CHECK(crel(hyp_M(a, b, z).value, Complex(R(r.mr), R(r.mi))) < 1e-27);
        CHECK(crel(hyp_U(a, b, z).value, Complex(R(r.ur), R(r.ui))) < 1e-27);
    }
    // zU route and the direct log series agree away from 0.
    Complex z(R("0.3"), R("0.9"));
    HypValue u = hyp_U_log_series(a, z), v = hyp_zU_log_series(a, z);
    CHECK(crel(z * u.value, v.value) < 1e-32);
    CHECK(crel(u.value + z * u.derivative, v.derivative) < 1e-32);
    CHECK_THROWS_AS(hyp_U(a, b, Complex(Real(-2))), branch_error);
    CHECK_NOTHROW(hyp_U(a, b, Complex(Real(-2)), CutSide::above));
}

TEST_CASE("modified Bessel functions: references and the double route") {
    PrecisionGuard g(kDigits);
    struct Ref {
        const char *t, *k0, *k1, *i0, *i1;
    };
    for (const Ref& r :
         {Ref{"0.001", "7.02368880056238134361208006301", "999.996238156085574277953404016",
              "1.00000025000001562500043402778", "0.00050000006250000260416672092014"},
          Ref{"0.5", "0.92441907122766586178192416753", "1.65644112000330089369644540317",
              "1.06348337074132351926318441545", "0.257894305390896316362479659523"},
          Ref{"3", "0.0347395043862792480723495513511", "0.0401564311281941843767057801527",
              "4.88079258586502408561123554602", "3.95337021740260939647863574058"},
          Ref{"10", "0.0000177800623161676518113011927995", "0.0000186487734538255845968168581224",
              "2815.71662846625447146981115343", "2670.98830370125465434103196677"}}) {
        Real t = R(r.t);
        CHECK(rel(bessel_K0(t), R(r.k0)) < 1e-28);
        CHECK(rel(bessel_K1(t), R(r.k1)) < 1e-28);
        CHECK(rel(bessel_I0(t), R(r.i0)) < 1e-28);
        CHECK(rel(bessel_I1(t), R(r.i1)) < 1e-28);
        double td = static_cast<double>(t);
        CHECK(bessel_K0(td) == doctest::Approx(static_cast<double>(R(r.k0))).epsilon(1e-14));
        CHECK(bessel_K1(td) == doctest::Approx(static_cast<double>(R(r.k1))).epsilon(1e-14));
    }
}

TEST_CASE("Laguerre recurrence against std::laguerre") {
    for (int n = 0; n <= 8; ++n)
        for (double x : {1e-3, 0.4, 3.0, 11.0}) {
            auto [L, dL] = laguerre(n, x);
            CHECK(L == doctest::Approx(std::laguerre(n, x)).epsilon(1e-12));
            double h = 1e-6;
            CHECK(dL == doctest::Approx((std::laguerre(n, x + h) - std::laguerre(n, x - h)) / (2 * h)).epsilon(1e-7));
        }
    CHECK_THROWS_AS(laguerre(-1, 0.5), domain_error);
}

TEST_CASE("elliptic integrals in the parameter convention, negative m included") {
    PrecisionGuard g(kDigits);
    struct Ref {
        const char *m, *K, *E;
    };
    for (const Ref& r : {Ref{"-24", "0.603222498495529498212494096459", "5.25251113492225023617479114712"},
                         Ref{"-8", "0.8428751774062980214356018289", "3.34122330513881455753237558127"},
                         Ref{"0.3", "1.71388944817879106203893484504", "1.44536306441266526201161760148"}}) {
        CHECK(rel(elliptic_K(R(r.m)), R(r.K)) < 1e-28);
        CHECK(rel(elliptic_E(R(r.m)), R(r.E)) < 1e-28);
    }
    Real m89 = lift(Real(8) / 9);
    CHECK(rel(elliptic_K(m89), R("2.5286255322188940643068054867")) < 1e-28);
    for (double m : {0.0, 0.2, 0.75, 0.99}) {
        CHECK(elliptic_K(m) == doctest::Approx(std::comp_ellint_1(std::sqrt(m))).epsilon(1e-14));
        CHECK(elliptic_E(m) == doctest::Approx(std::comp_ellint_2(std::sqrt(m))).epsilon(1e-14));
    }
    CHECK_THROWS_AS(elliptic_K(1.0), domain_error);
}

TEST_CASE("bound-state series recurrences equal the closed M/U forms") {
    PrecisionGuard g(kDigits);
    for (const char* eta : {"-0.3", "-2.5", "0.4"})
        for (const char* u : {"0.2", "1.5", "6"}) {
            INFO(eta);
            INFO(u);
            auto [J, K] = bound_series_JK(R(eta), R(u));
            CHECK(rel(J, bound_J_closed(R(eta), R(u))) < 1e-28);
            CHECK(rel(K, bound_K_closed(R(eta), R(u))) < 1e-28);
            Real gamma1 = gamma_real(1 + R(eta));
            CHECK(rel(bound_series_L(R(eta), R(u)), gamma1 * K) < 1e-28);
        }
    CHECK_THROWS_AS(bound_series_JK(R("-2"), R("1")), pole_error);
}
