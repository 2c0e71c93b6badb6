#include "coulomb1d/bound/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coulomb1d/bound/polys.hpp"
#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/kernels.hpp"
#include "coulomb1d/numerics/precision.hpp"
#include "coulomb1d/specfun/bessel.hpp"
#include "coulomb1d/specfun/gamma.hpp"

namespace c1d {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double anomalous_prefactor(int n) { return 1.0 / (std::pow(-2.0, n) * kSqrtPi); }

struct Coeffs {
    std::vector<double> p, q, dp, dq;
};

Coeffs coeffs(int n) {
    const PolyPair& pp = poly_pair(n);
    Coeffs c{to_double(pp.p), to_double(pp.q), {}, {}};
    auto deriv = [](const std::vector<double>& a) {
        std::vector<double> d;
        for (std::size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<double>(i) * a[i]);
        if (d.empty()) d.push_back(0.0);
        return d;
    };
    c.dp = deriv(c.p);
    c.dq = deriv(c.q);
    return c;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int parity_sign(const BoundState& s) {
    return s.kind == StateKind::regular ? -s.parity_factor : s.parity_factor;
}

// int_0^inf t^{mu-1} K_i K_j dt for integer-shifted mu >= 3.
Real moment_00(const Real& mu) {
    return sqrt(pi_real()) * pow(gamma_real(mu / 2), 3) / (4 * gamma_real((mu + 1) / 2));
}
Real moment_11(const Real& mu) {
    return sqrt(pi_real()) * gamma_real(mu / 2 + 1) * gamma_real(mu / 2 - 1) * gamma_real(mu / 2) /
           (4 * gamma_real((mu + 1) / 2));
}
Real moment_01(const Real& mu) {
    Real a = gamma_real((mu + 1) / 2), b = gamma_real((mu - 1) / 2);
    return pow(Real(2), mu - 3) / gamma_real(mu) * a * a * b * b;
}

std::vector<BigInt> product(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// int_0^inf xi_n^2 du from the K-moment formulas.
double anomalous_moment_exact(int n) {
    PrecisionGuard g(40);
    const PolyPair& pp = poly_pair(n);
    std::vector<BigInt> P2 = product(pp.p, pp.p), Q2 = product(pp.q, pp.q), PQ = product(pp.p, pp.q);
    // u^2 (p K0 + q K1)^2: the u^{k+2} coefficient pairs with mu = k + 3.
    Real tot = 0;
    for (std::size_t k = 0; k < P2.size(); ++k) tot += Real(P2[k].str()) * moment_00(Real(int(k) + 3));
    for (std::size_t k = 0; k < Q2.size(); ++k) tot += Real(Q2[k].str()) * moment_11(Real(int(k) + 3));
    for (std::size_t k = 0; k < PQ.size(); ++k) tot += 2 * Real(PQ[k].str()) * moment_01(Real(int(k) + 3));
    return static_cast<double>(tot / (pow(Real(4), n) * pi_real()));
}

double nu_of(int n) {
    double df = double_factorial(2 * n - 1).convert_to<double>();
    return std::pow(2.0, 2 * n + 1) / ((2 * n + 1) * df * df);
}

double beta_from_norm(int n, double N) {
    const double pi = std::numbers::pi;
    return (N - nu_of(n) * pi / std::pow(2.0, n + 3)) * std::pow(2.0, 2 * n + 2) * pi / (2 * n + 1);
}

} // namespace

std::vector<BoundState> spectrum(StateKind kind, int n_max, double lambda, ParityConvention pc) {
    if (!(lambda < 0.0)) throw domain_error("bound states need an attractive coupling (lambda < 0)");
    if (n_max < 1) throw config_error("n_max must be >= 1");
    std::vector<BoundState> out;
    const double L = std::abs(lambda);
    for (int n = kind == StateKind::regular ? 1 : 0; n <= n_max; ++n) {
        BoundState s;
        s.kind = kind;
        s.n = n;
        if (kind == StateKind::regular) {
            s.eta_n = -n;
            s.energy = 1.0 / (double(n) * n);
            s.parity_factor = pc.mu;
            s.norm_const = 2.0 * s.scale() * regular_norm(n) / L;
        } else {
            s.eta_n = -n - 0.5;
            s.energy = 1.0 / ((n + 0.5) * (n + 0.5));
            s.parity_factor = pc.nu;
            s.norm_const = 2.0 * s.scale() * anomalous_moment_exact(n) / L;
        }
        out.push_back(s);
    }
    return out;
}

std::vector<BoundState> spectrum_interlaced(int n_max, double lambda, ParityConvention pc) {
    std::vector<BoundState> all = spectrum(StateKind::anomalous, n_max, lambda, pc);
    std::vector<BoundState> reg = spectrum(StateKind::regular, n_max, lambda, pc);
    all.insert(all.end(), reg.begin(), reg.end());
    std::stable_sort(all.begin(), all.end(),
                     [](const BoundState& a, const BoundState& b) { return a.energy > b.energy; });
    return all;
}

double regular_wavefunction(int n, double u, int mu) {
    if (n < 1) throw domain_error("regular states start at n = 1");
    double a = std::abs(u);
    double v = -(u / n) * std::exp(-a) * laguerre(n, 2.0 * a).second;
    return u < 0 ? mu * v : v;
}

double regular_derivative(int n, double u, int mu) {
    if (n < 1) throw domain_error("regular states start at n = 1");
    double a = std::abs(u);
    // d/da [a e^{-a} L'(2a)] with L'' from the Laguerre equation x L'' = (x - 1) L' - n L
    auto [L, dL] = laguerre(n, 2.0 * a);
    double x = 2.0 * a;
    double d2L = x > 0 ? ((x - 1.0) * dL - n * L) / x : n * (n - 1) / 2.0;
    double g = -(1.0 / n) * std::exp(-a) * ((1.0 - a) * dL + 2.0 * a * d2L);
    return u < 0 ? mu * g : g;
}

double anomalous_wavefunction(int n, double u, int nu) {
    if (n < 0) throw domain_error("anomalous states start at n = 0");
    if (u == 0.0) throw domain_error("u = 0 is a ramification point of xi_n");
    const PolyPair& pp = poly_pair(n);
    double a = std::abs(u);
    double v = (eval_poly(pp.p, a) * bessel_K0(a) + eval_poly(pp.q, a) * bessel_K1(a)) * a *
               anomalous_prefactor(n);
    return u < 0 ? nu * v : v;
}

double anomalous_derivative(int n, double u, int nu) {
    if (n < 0) throw domain_error("anomalous states start at n = 0");
    if (u == 0.0) throw domain_error("u = 0 is a ramification point of xi_n");
    Coeffs c = coeffs(n);
    double a = std::abs(u);
    double K0 = bessel_K0(a), K1 = bessel_K1(a);
    double p = horner(c.p, a), q = horner(c.q, a), dp = horner(c.dp, a), dq = horner(c.dq, a);
    double d = (dp * a * K0 + p * K0 - p * a * K1 + dq * a * K1 - q * a * K0) * anomalous_prefactor(n);
    return u < 0 ? -nu * d : d;
}

double anomalous_at_zero(int n) {
    return double_factorial(2 * n - 1).convert_to<double>() * anomalous_prefactor(n);
}

std::vector<double> anomalous_on_grid(int n, const std::vector<double>& u, int nu) {
    Coeffs c = coeffs(n);
    std::vector<double> a(u.size()), pv(u.size()), qv(u.size()), out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0.0) throw domain_error("u = 0 is a ramification point of xi_n");
        a[i] = std::abs(u[i]);
    }
    kernels::horner_batch(c.p.data(), c.p.size(), a.data(), pv.data(), a.size());
    kernels::horner_batch(c.q.data(), c.q.size(), a.data(), qv.data(), a.size());
    const double pref = anomalous_prefactor(n);
    for (std::size_t i = 0; i < u.size(); ++i) {
        double v = (pv[i] * bessel_K0(a[i]) + qv[i] * bessel_K1(a[i])) * a[i] * pref;
        out[i] = u[i] < 0 ? nu * v : v;
    }
    return out;
}

double wavefunction(const BoundState& s, double u) {
    return s.kind == StateKind::regular ? regular_wavefunction(s.n, u, s.parity_factor)
                                        : anomalous_wavefunction(s.n, u, s.parity_factor);
}

QuadResult overlap_detail(const BoundState& a, const BoundState& b, double lambda, Scheme scheme) {
    if (lambda == 0.0) throw domain_error("overlaps need lambda != 0");
    const double sa = a.scale(), sb = b.scale();
    const double sigma = 1.0 / (1.0 / sa + 1.0 / sb);
    // x |lambda| = sigma v; the product decays like e^{-v}.
    Integrand f = [&](double v) {
        double y = sigma * v;
        return wavefunction(a, y / sa) * wavefunction(b, y / sb);
    };
    QuadratureSpec spec;
    spec.domain = Domain::zero_to_inf;
    spec.singularity_hint = Singularity::log_at_zero;
    spec.scheme = scheme;
    spec.split = 1.0;
    // Cancellation makes |value| the wrong scale; the error is held to the Cauchy-Schwarz bound instead.
    auto moment = [](const BoundState& s) { return s.kind == StateKind::regular ? 0.25 : anomalous_moment_exact(s.n); };
    spec.abs_tol = 1e-13 * std::max(1.0, std::sqrt(sa * moment(a) * sb * moment(b)) / sigma);
    spec.rel_tol = 1e-11;
    spec.max_refinements = 10;
    QuadResult r = integrate(f, spec);
    double s = sigma / std::abs(lambda);
    r.value *= s;
    r.error *= s;
    return r;
}

double overlap(const BoundState& a, const BoundState& b, OverlapDomain dom, double lambda, Scheme scheme) {
    if (dom == OverlapDomain::full_line && parity_sign(a) * parity_sign(b) < 0) return 0.0;
    double half = overlap_detail(a, b, lambda, scheme).value;
    return dom == OverlapDomain::half_line ? half : 2.0 * half;
}

AnomalousNorm anomalous_norm(int n) {
    if (n < 0) throw domain_error("anomalous states start at n = 0");
    AnomalousNorm out{};
    QuadratureSpec spec;
    spec.domain = Domain::zero_to_inf;
    spec.singularity_hint = Singularity::log_at_zero;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-14;
    // xi_n^2 decays like e^{-2u}; v = 2u puts it on the unit-rate tail.
    Integrand f = [n](double v) {
        double x = anomalous_wavefunction(n, v / 2);
        return 0.5 * x * x;
    };
    out.half_line = integrate(f, spec).value;
    out.half_line_exact = anomalous_moment_exact(n);
    out.nu_n = nu_of(n);
    out.beta = beta_from_norm(n, out.half_line);
    out.beta_exact = beta_from_norm(n, out.half_line_exact);
    return out;
}

double regular_norm(int n) {
    QuadratureSpec spec;
    spec.domain = Domain::zero_to_inf;
    spec.rel_tol = 1e-13;
    spec.abs_tol = 1e-15;
    spec.scheme = Scheme::gauss_kronrod;
    Integrand f = [n](double v) {
        double z = regular_wavefunction(n, v / 2);
        return 0.5 * z * z;
    };
    return integrate(f, spec).value;
}

double regular_orthogonality(int n, int m) {
    if (n < 1 || m < 1) throw domain_error("regular states start at n = 1");
    BoundState a{StateKind::regular, n, double(-n), 1.0 / (n * n), 1, 0.0};
    BoundState b{StateKind::regular, m, double(-m), 1.0 / (m * m), 1, 0.0};
    return overlap_detail(a, b, -1.0, Scheme::gauss_kronrod).value;
}

double delta_bracket(int n, int p, double eps) {
    double xn = anomalous_wavefunction(n, eps), xp = anomalous_wavefunction(p, eps);
    double dn = anomalous_derivative(n, eps), dp = anomalous_derivative(p, eps);
    return 4.0 * (dn * xp / (2 * n + 1) - xn * dp / (2 * p + 1));
}

DeltaResult delta_np(int n, int p) {
    if (n == p) throw domain_error("delta_np needs n != p");
    DeltaResult r;
    ExtrapolationSpec spec;
    spec.model = ExtrapolationModel::richardson_log;
    spec.order = 4;
    for (int i = 0; i <= 12; ++i) {
        double e = std::pow(10.0, -6.0 - 0.5 * i);
        spec.grid.push_back(e);
        r.samples.emplace_back(e, delta_bracket(n, p, e));
    }
    r.limit = extrapolate_limit(r.samples, spec);
    return r;
}

EllipticForms elliptic_closed_forms() {
    PrecisionGuard g(30);
    auto E = [](const Real& m) { return elliptic_E(m); };
    auto K = [](const Real& m) { return elliptic_K(m); };
    const Real pi = pi_real();
    Real r8 = Real(8) / 9, r24 = Real(24) / 25, r16a = Real(-16) / 9, r16b = Real(16) / 25;
    Real a = 3 / (8 * pi) - (9 * (E(Real(-8)) - 3 * E(r8) - 3 * K(Real(-8)) + K(r8)) + 3 * log(Real(729))) / 64;
    Real b = -35 / (48 * pi) +
             (175 * (E(Real(-24)) - 5 * E(r24) - 4 * K(Real(-24)) + Real(4) / 5 * K(r24)) + 27 * log(Real(5))) / 1728;
    Real c = 45 / (32 * pi) -
             45 * (2705 * (3 * E(r16a) - 5 * E(r16b)) - 2877 * (5 * K(r16a) - 3 * K(r16b)) + 15 * log(Real(729))) / 256;
    return {static_cast<double>(a), static_cast<double>(b), static_cast<double>(c)};
}

} // namespace c1d
