#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>
#include <utility>

#include "coulomb1d/errors.hpp"

namespace c1d {

// Expression templates are off so `auto` locals hold values, not proxies.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionContext {
    int working_digits = 50;
    double target_rel_err = 1e-40;

    // Target that leaves ten guard digits.
    static PrecisionContext with_digits(int digits);

    // Throws config_error unless digits >= 16 and target >= 10^(4-digits).
    void validate() const;
};

// Precision cap: COULOMB1D_MAX_DIGITS if set and positive, else 2048.
int max_digits();

// Sets the thread-local default mpfr precision for its lifetime.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int digits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Copy of x carried at the current default precision.
inline Real lift(const Real& x) { return Real(x, Real::default_precision()); }

template <class T>
struct Precise {
    T value;
    int achieved_digits;
};

template <class F>
auto with_precision(int digits, F&& f) {
    if (digits < 16) throw config_error("working digits must be at least 16");
    if (digits > max_digits())
        throw resource_error("requested " + std::to_string(digits) +
                             " digits exceeds cap of " + std::to_string(max_digits()));
    PrecisionGuard guard(digits);
    using T = decltype(f(PrecisionContext::with_digits(digits)));
    return Precise<T>{f(PrecisionContext::with_digits(digits)), digits};
}

template <class T>
struct Escalated {
    T value;
    int achieved_digits;
    double rel_change;  // |v(d) - v(2d)| / |v(2d)|, the self-reported error
};

// Runs f at d and 2d digits, doubling d until the two agree to the target.
// `distance` maps two results to a relative difference.
template <class F, class D>
auto escalate(PrecisionContext ctx, F&& f, D&& distance) {
    ctx.validate();
    using T = decltype(f(ctx));
    int d = ctx.working_digits;
    auto run = [&](int digits) {
        PrecisionGuard guard(digits);
        PrecisionContext c = ctx;
        c.working_digits = digits;
        return f(c);
    };
    T lo = run(d);
    while (true) {
        if (2 * d > max_digits())
            throw resource_error("precision escalation reached the cap of " +
                                 std::to_string(max_digits()) + " digits");
        T hi = run(2 * d);
        double change = distance(lo, hi);
        if (change <= ctx.target_rel_err || !std::isfinite(change)) {
            if (!std::isfinite(change)) throw convergence_error("non-finite result during escalation");
            return Escalated<T>{std::move(hi), d, change};
        }
        lo = std::move(hi);
        d *= 2;
    }
}

double rel_diff(const Real& a, const Real& b);

} // namespace c1d
