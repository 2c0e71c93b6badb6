#include "coulomb1d/numerics/precision.hpp"

#include <cstdlib>

namespace c1d {

PrecisionContext PrecisionContext::with_digits(int digits) {
    PrecisionContext c;
    c.working_digits = digits;
    c.target_rel_err = std::pow(10.0, -(digits - 10));
    if (c.target_rel_err == 0.0) c.target_rel_err = 1e-300;
    return c;
}

void PrecisionContext::validate() const {
    if (working_digits < 16) throw config_error("working_digits must be >= 16");
    if (!(target_rel_err > 0.0)) throw config_error("target_rel_err must be positive");
    // Guard-digit rule; below 1e-300 a double cannot express the bound.
    double floor = std::pow(10.0, -(working_digits - 4));
    if (floor > 0.0 && target_rel_err < floor * (1 - 1e-12))
        throw config_error("target_rel_err tighter than working_digits allows");
}

int max_digits() {
    if (const char* env = std::getenv("COULOMB1D_MAX_DIGITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1'000'000) return static_cast<int>(v);
    }
    return 2048;
}

PrecisionGuard::PrecisionGuard(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(saved_); }

double rel_diff(const Real& a, const Real& b) {
    Real scale = abs(b);
    Real d = abs(a - b);
    if (scale == 0) return d == 0 ? 0.0 : static_cast<double>(d);
    return static_cast<double>(d / scale);
}

} // namespace c1d
