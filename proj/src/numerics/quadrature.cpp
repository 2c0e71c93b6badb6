#include "coulomb1d/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <numbers>
#include <queue>
#include <vector>

#include "coulomb1d/errors.hpp"
#include "coulomb1d/numerics/kernels.hpp"

namespace c1d {

void QuadratureSpec::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw config_error("quadrature tolerances must be positive");
    if (max_refinements < 1) throw config_error("max_refinements must be >= 1");
    if (domain == Domain::finite && !(upper > lower)) throw config_error("empty finite interval");
    if (domain == Domain::symmetric_interval && !(upper > 0.0)) throw config_error("half-width must be positive");
    if (domain == Domain::zero_to_inf && !(split > 0.0)) throw config_error("split must be positive");
}

namespace {

std::string fmt_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

constexpr double kHalfPi = std::numbers::pi / 2;
// Largest t whose endpoint offset stays above 1e-270 in double.
constexpr double kTmax = 6.0;

// One tanh-sinh node pair at offset t >= 0. delta is the distance from the
// nearer endpoint in the unit variable s, so nodes never collapse onto it.
struct Node {
    double delta;   // s = delta or s = 1 - delta
    double weight;  // ds/dt
};

Node node_at(double t) {
    double v = kHalfPi * std::sinh(t);
    double e = std::exp(-2.0 * v);
    double delta = e / (1.0 + e);
    // ds/dt = (pi/4) cosh t / cosh^2 v, written in e^{-2v} to avoid overflow.
    double w = kHalfPi * std::cosh(t) * e / ((1.0 + e) * (1.0 + e)) * 2.0;
    return {delta, w};
}

template <class Eval>
QuadResult tanh_sinh_unit(Eval&& eval, double tol, int max_levels) {
    // eval(delta, weight, from_right) returns the weighted contribution pieces.
    QuadResult res;
    std::vector<double> w, fv;
    double h = 1.0;
    double prev = 0.0;
    double sum = 0.0;
    auto add_level = [&](double t0, double step) {
        w.clear();
        fv.clear();
        for (double t = t0; t <= kTmax; t += step) {
            Node nd = node_at(t);
            if (nd.delta == 0.0) break;
            double wl, fl, wr, fr;
            eval(nd, false, wl, fl);
            w.push_back(wl); fv.push_back(fl);
            if (t > 0.0) {
                eval(nd, true, wr, fr);
                w.push_back(wr); fv.push_back(fr);
            }
        }
        res.evaluations += static_cast<long>(fv.size());
        return kernels::weighted_sum(w.data(), fv.data(), w.size());
    };
    sum = add_level(0.0, h);
    prev = sum * h;
    for (int level = 1; level <= max_levels; ++level) {
        h /= 2;
        sum += add_level(h, 2 * h);
        double cur = sum * h;
        res.value = cur;
        res.error = std::abs(cur - prev);
        if (level >= 3 && res.error <= tol * std::max(1.0, std::abs(cur))) return res;
        prev = cur;
    }
    return res;
}

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class G>
Panel gk15(G&& g, double a, double b, long& evals) {
    double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    double wk[15], fk[15], wg[15];
    int m = 0;
    for (int j = 0; j < 7; ++j) {
        double dx = hl * kXgk[j];
        double f1 = g(c - dx), f2 = g(c + dx);
        double gw = (j % 2 == 1) ? kWg[j / 2] : 0.0;
        wk[m] = kWgk[j]; wg[m] = gw; fk[m++] = f1;
        wk[m] = kWgk[j]; wg[m] = gw; fk[m++] = f2;
    }
    wk[m] = kWgk[7]; wg[m] = kWg[3]; fk[m++] = g(c);
    evals += 15;
    double k = kernels::weighted_sum(wk, fk, 15) * hl;
    double gs = kernels::weighted_sum(wg, fk, 15) * hl;
    return {a, b, k, std::abs(k - gs)};
}

template <class G>
QuadResult gk_adaptive(G&& g, double a, double b, double tol, double abs_tol, int max_panels) {
    QuadResult res;
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    // Start from a few panels so narrow features are not missed.
    constexpr int init = 8;
    for (int i = 0; i < init; ++i) {
        double lo = a + (b - a) * i / init, hi = a + (b - a) * (i + 1) / init;
        Panel p = gk15(g, lo, hi, res.evaluations);
        total += p.value; err += p.error;
        heap.push(p);
    }
    int panels = init;
    while (err > abs_tol + tol * std::abs(total) && panels < max_panels) {
        Panel p = heap.top();
        heap.pop();
        double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) break;
        Panel l = gk15(g, p.a, mid, res.evaluations), r = gk15(g, mid, p.b, res.evaluations);
        total += l.value + r.value - p.value;
        err += l.error + r.error - p.error;
        heap.push(l);
        heap.push(r);
        ++panels;
    }
    // Re-sum from scratch so drift from incremental updates does not leak in.
    total = 0.0; err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    res.value = total;
    res.error = err;
    return res;
}

} // namespace

QuadResult tanh_sinh(const Integrand& f, double a, double b, double tol, int max_levels) {
    double len = b - a;
    auto eval = [&](const Node& nd, bool right, double& w, double& fv) {
        double x = right ? b - len * nd.delta : a + len * nd.delta;
        w = nd.weight * len;
        fv = f(x);
        if (!std::isfinite(fv)) fv = 0.0;  // endpoint singularity at vanishing weight
    };
    return tanh_sinh_unit(eval, tol, max_levels);
}

QuadResult tanh_sinh_tail(const Integrand& f, double a, double tol, int max_levels) {
    auto eval = [&](const Node& nd, bool right, double& w, double& fv) {
        // s = 1 - delta near the far end: u = a - log(delta), du/ds = 1/delta.
        if (right) {
            double u = a - std::log(nd.delta);
            w = nd.weight / nd.delta;
            fv = f(u);
        } else {
            double u = a - std::log1p(-nd.delta);
            w = nd.weight / (1.0 - nd.delta);
            fv = f(u);
        }
        if (!std::isfinite(fv) || !std::isfinite(w)) { fv = 0.0; w = 0.0; }
    };
    return tanh_sinh_unit(eval, tol, max_levels);
}

QuadResult gauss_kronrod(const Integrand& f, double a, double b, double tol, int max_panels, double abs_tol) {
    return gk_adaptive(f, a, b, tol, abs_tol, max_panels);
}

QuadResult gauss_kronrod_tail(const Integrand& f, double a, double tol, int max_panels, double abs_tol) {
    // Rational map: polynomial-times-exponential integrands vanish at s = 1
    // instead of leaving a log singularity there.
    auto g = [&](double s) {
        double w = 1.0 - s;
        double v = f(a + s / w) / (w * w);
        return std::isfinite(v) ? v : 0.0;
    };
    return gk_adaptive(g, 0.0, 1.0, tol, abs_tol, max_panels);
}

QuadResult integrate(const Integrand& f, const QuadratureSpec& spec) {
    spec.validate();
    // Each of the two zero_to_inf pieces gets half of the absolute budget.
    double abs_tol = 0.05 * spec.abs_tol;
    int levels = spec.max_refinements;
    int panels = 64 << std::min(spec.max_refinements, 10);
    double magnitude = 0.0;
    auto attempt = [&](double tol) {
        auto finite = [&](double a, double b) {
            return spec.scheme == Scheme::tanh_sinh ? tanh_sinh(f, a, b, tol, levels)
                                                    : gauss_kronrod(f, a, b, tol, panels, abs_tol);
        };
        QuadResult r;
        switch (spec.domain) {
        case Domain::finite: r = finite(spec.lower, spec.upper); break;
        case Domain::symmetric_interval: r = finite(-spec.upper, spec.upper); break;
        case Domain::zero_to_inf: {
            QuadResult in = finite(0.0, spec.split);
            QuadResult out = spec.scheme == Scheme::tanh_sinh
                                 ? tanh_sinh_tail(f, spec.split, tol, levels)
                                 : gauss_kronrod_tail(f, spec.split, tol, panels, abs_tol);
            r.value = in.value + out.value;
            r.error = in.error + out.error;
            r.evaluations = in.evaluations + out.evaluations;
            magnitude = std::abs(in.value) + std::abs(out.value);
            break;
        }
        }
        if (spec.domain != Domain::zero_to_inf) magnitude = std::abs(r.value);
        return r;
    };
    double tol = std::min(spec.rel_tol, 1e-3) * 0.1;
    QuadResult r = attempt(tol);
    // Pieces converge relative to their own size; cancellation between them needs a tighter pass.
    if (std::isfinite(r.value) && magnitude > 2.0 * std::abs(r.value) &&
        r.error > spec.abs_tol + spec.rel_tol * std::abs(r.value)) {
        QuadResult again = attempt(std::max(tol * std::abs(r.value) / magnitude, 1e-15));
        again.evaluations += r.evaluations;
        r = again;
    }
    if (!std::isfinite(r.value)) throw convergence_error("quadrature produced a non-finite value");
    if (r.error > spec.abs_tol + spec.rel_tol * std::abs(r.value))
        throw convergence_error("quadrature tolerance not met: error " + fmt_g(r.error) + " on value " +
                                fmt_g(r.value));
    return r;
}

} // namespace c1d
