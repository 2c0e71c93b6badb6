#include "coulomb1d/bound/polys.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/specfun/bessel.hpp"
#include "coulomb1d/specfun/gamma.hpp"
#include "coulomb1d/specfun/hypergeometric.hpp"

namespace c1d {

namespace {

using Coeffs = std::vector<BigInt>;

Coeffs& pad(Coeffs& c, std::size_t n) {
    if (c.size() < n) c.resize(n, BigInt(0));
    return c;
}

// (2n+a) P + 2x (P' - p - q)
Coeffs step(const Coeffs& P, const Coeffs& p, const Coeffs& q, int mult) {
    std::size_t deg = std::max(p.size(), q.size());
    Coeffs inner(deg, BigInt(0));
    for (std::size_t i = 1; i < P.size(); ++i) inner[i - 1] += BigInt(static_cast<long>(i)) * P[i];
    for (std::size_t i = 0; i < p.size(); ++i) inner[i] -= p[i];
    for (std::size_t i = 0; i < q.size(); ++i) inner[i] -= q[i];
    Coeffs out(deg + 1, BigInt(0));
    for (std::size_t i = 0; i < P.size(); ++i) out[i] += BigInt(mult) * P[i];
    for (std::size_t i = 0; i < inner.size(); ++i) out[i + 1] += 2 * inner[i];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

// deque keeps references stable across push_back.
struct Memo {
    std::shared_mutex mu;
    std::deque<PolyPair> table{PolyPair{0, {BigInt(1)}, {BigInt(1)}}};
};

Memo& memo() {
    static Memo m;
    return m;
}

} // namespace

const PolyPair& poly_pair(int n) {
    if (n < 0) throw domain_error("polynomial order must be >= 0");
    Memo& m = memo();
    {
        std::shared_lock lock(m.mu);
        if (static_cast<std::size_t>(n) < m.table.size()) return m.table[n];
    }
    std::unique_lock lock(m.mu);
    while (m.table.size() <= static_cast<std::size_t>(n)) {
        const PolyPair& last = m.table.back();
        int k = last.n;
        Coeffs p = last.p, q = last.q;
        pad(p, q.size());
        pad(q, p.size());
        PolyPair next{k + 1, step(p, p, q, 2 * k + 3), step(q, p, q, 2 * k + 1)};
        m.table.push_back(std::move(next));
    }
    return m.table[n];
}

BigInt double_factorial(int k) {
    BigInt r = 1;
    for (int i = k; i > 1; i -= 2) r *= i;
    return r;
}

std::vector<double> to_double(const std::vector<BigInt>& c) {
    std::vector<double> out;
    out.reserve(c.size());
    for (const BigInt& v : c) out.push_back(v.convert_to<double>());
    return out;
}

Real eval_poly(const std::vector<BigInt>& c, const Real& x) {
    Real acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Real(it->str());
    return acc;
}

double eval_poly(const std::vector<BigInt>& c, double x) {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

IdentityResiduals bessel_identity_residuals(int n, const Real& t0) {
    if (!(t0 > 0)) throw domain_error("identities are checked for t > 0");
    const PolyPair& pp = poly_pair(n);
    Real t = lift(t0);
    Real I0 = bessel_I0(t), I1 = bessel_I1(t), K0 = bessel_K0(t), K1 = bessel_K1(t);
    Real pt = eval_poly(pp.p, t), qt = eval_poly(pp.q, t);
    Real pm = eval_poly(pp.p, Real(-t)), qm = eval_poly(pp.q, Real(-t));
    Real df1 = Real(double_factorial(2 * n + 1).str());
    Real dfm = Real(double_factorial(2 * n - 1).str());
    Real sp = sqrt(pi_real());
    Real et = exp(-t);
    Complex z(Real(2 * t));
    Complex two(Real(2));
    Real half = Real(1) / 2;
    auto rel = [](const Real& a, const Real& b) { return rel_diff(a, b); };

    IdentityResiduals r{};
    Real mm = et * hyp_M(Complex(Real(half - n)), two, z).value.re * df1;
    r.M_minus = rel(mm, pt * I0 - qt * I1);
    Real um = et * hyp_U(Complex(Real(half - n)), two, z).value.re;
    Real sgn = (n % 2 == 0) ? Real(1) : Real(-1);
    r.U_minus = rel(um, sgn / (pow(Real(2), n + 1) * sp) * (pt * K0 + qt * K1));
    Real mp = et * hyp_M(Complex(Real(half * 3 + n)), two, z).value.re * df1;
    r.M_plus = rel(mp, pm * I0 + qm * I1);
    Real up = et * hyp_U(Complex(Real(half * 3 + n)), two, z).value.re;
    r.U_plus = rel(up, pow(Real(2), n) / (df1 * dfm * sp) * (-pm * K0 + qm * K1));
    return r;
}

} // namespace c1d
