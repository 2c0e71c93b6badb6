#pragma once

#include <utility>

#include "coulomb1d/numerics/precision.hpp"

namespace c1d {

// J_eta(u) = u e^{-u} M(1+eta, 2, 2u) and K_eta(u) = 2u e^{-u} U(1+eta, 2, 2u)
// from the power-series recurrences (A_k for J, a_k for the theta part).
// The recurrences build L_eta = Gamma(1+eta) K_eta; K is returned already
// divided by that constant. Throws pole_error when 1+eta is in {0, -1, ...}.
std::pair<Real, Real> bound_series_JK(const Real& eta, const Real& u);

// L_eta(u) exactly as the recurrences produce it, before normalization.
Real bound_series_L(const Real& eta, const Real& u);

// Closed forms through M and U, used to cross-check the recurrences.
Real bound_J_closed(const Real& eta, const Real& u);
Real bound_K_closed(const Real& eta, const Real& u);

} // namespace c1d
