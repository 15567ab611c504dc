#pragma once

#include <span>

#include "monocont/complex.hpp"
#include "monocont/config.hpp"
#include "monocont/rational.hpp"

namespace monocont {

/// Falling factorials with k above this use the log-gamma route.
inline constexpr long kProductCutoff = 64;

/// Principal branch of log Gamma(z): analytic off the negative real axis and
/// satisfying log_gamma(z + 1) = log_gamma(z) + log(z). Stirling series for
/// Re(z) >= 0.5 (after upward recurrence), reflection below.
/// Throws PoleError within `snap_radius` of a non-positive integer.
Complex log_gamma(Complex z, double snap_radius = EvalConfig{}.integer_snap_radius);

/// Gamma(z); PoleError at the poles, DomainError on overflow.
Complex gamma(Complex z, double snap_radius = EvalConfig{}.integer_snap_radius);

/// (s)_k = s (s-1) ... (s-k+1); 1 for k == 0.
Complex falling_factorial(Complex s, long k, double snap_radius = EvalConfig{}.integer_snap_radius);

/// Generalized binomial coefficient (s)_k / k!. Exactly 0 when s snaps to a
/// nonnegative integer m < k.
Complex binom(Complex s, long k, double snap_radius = EvalConfig{}.integer_snap_radius);

/// Richardson (Neville) extrapolation of binom(p-1+eps, p) * zeta(1-eps) to
/// eps -> 0 along `eps_sequence`. Converged once two successive extrapolants
/// differ by less than `tol`; NonConvergence otherwise.
SeriesEvaluation alpha_limit(long p, std::span<const double> eps_sequence, const EvalConfig& cfg = {},
                             double tol = 1e-10);

/// Closed-form limit of alpha_limit: exactly -1/p.
ExactRational alpha(long p);

namespace detail {

/// Direct product path of falling_factorial, any k.
Complex falling_factorial_product(Complex s, long k);
/// Log-gamma path of falling_factorial, any k.
Complex falling_factorial_lgamma(Complex s, long k, double snap_radius);

}  // namespace detail

}  // namespace monocont
