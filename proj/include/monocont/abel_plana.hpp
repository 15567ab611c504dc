#pragma once

#include "monocont/config.hpp"
#include "monocont/quadrature.hpp"

namespace monocont {

inline constexpr double kTwoPi = 2.0 * kPi;

/// Distance from a negative even integer inside which abel_plana_zeta_check
/// compares absolutely (both sides vanish there).
inline constexpr double kTrivialZeroBand = 1e-3;
inline constexpr double kTrivialZeroAbsTol = 1e-11;

/// Bose-type integral of t^(-s) / (e^(scale t) - 1) over (0, inf), Re(s) < 0.
/// On (0, 1] the terms 1/(scale t) - 1/2 of the integrand's Laurent
/// expansion are integrated in closed form and the regular remainder by
/// tanh-sinh; tanh-sinh on
/// [1, t_max] with t_max = quad_tmax_factor / scale, extended until the
/// integrand bound beyond t_max is below quad_tol |value|.
QuadratureResult bose_integral(Complex s, double scale, const EvalConfig& cfg = {});

/// i^(1-s) + (-i)^(1-s) against 2 sin(pi s / 2), principal-branch powers.
/// Passes when |lhs - rhs| <= tol * max(1, |rhs|).
IdentityReport sin_identity_check(Complex s, double tol = 1e-13);

/// 2 sin(pi s/2) * bose_integral(s, 2 pi) against zeta(s) for Re(s) < 0.
/// Agreement certifies that the continued integral of x^(-s) over (0, inf)
/// is zero. Relative comparison, except within kTrivialZeroBand of a
/// negative even integer where it is absolute at kTrivialZeroAbsTol.
IdentityReport abel_plana_zeta_check(Complex s, const EvalConfig& cfg = {}, double tol = 1e-9);

/// bose_integral(s, 1) against Gamma(1-s) zeta(1-s), Re(s) < 0.
IdentityReport gamma_zeta_integral_check(Complex s, const EvalConfig& cfg = {}, double tol = 1e-10);

}  // namespace monocont
