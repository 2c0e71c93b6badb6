#pragma once

#include "coulomb1d/numerics/complex.hpp"

namespace c1d {

// Side of the negative real z axis used by log z and z^{-a} in U.
enum class CutSide { none, above, below };

enum class HypRegime { series, asymptotic };

struct HypValue {
    Complex value;
    Complex derivative;  // d/dz
    HypRegime regime;
};

// |z| beyond which the large-|z| expansions are used. a_mag measures how far
// the parameters sit from the elementary case (|eta| for the Coulomb a = 1 - i eta).
Real asymptotic_radius(const Real& a_mag, int digits);

// Kummer M(a, b, z). b must not be a non-positive integer.
HypValue hyp_M(const Complex& a, const Complex& b, const Complex& z);

// Tricomi U(a, b, z). The small-|z| path is the b = 2 logarithmic case;
// other b are served only where the asymptotic expansion applies.
// Throws branch_error on the negative real axis when side is none.
HypValue hyp_U(const Complex& a, const Complex& b, const Complex& z, CutSide side = CutSide::none);

// Individual regimes, exposed for the regime-consistency checks.
HypValue hyp_M_series(const Complex& a, const Complex& b, const Complex& z);
HypValue hyp_M_asymptotic(const Complex& a, const Complex& b, const Complex& z);
HypValue hyp_U_log_series(const Complex& a, const Complex& z, CutSide side = CutSide::none);
// z U(a, 2, z) and its z-derivative; finite as z -> 0, so no pole cancellation.
HypValue hyp_zU_log_series(const Complex& a, const Complex& z, CutSide side = CutSide::none);
HypValue hyp_U_asymptotic(const Complex& a, const Complex& b, const Complex& z,
                          CutSide side = CutSide::none);

} // namespace c1d
