#pragma once

#include <span>

#include "monocont/complex.hpp"
#include "monocont/config.hpp"

namespace monocont {

/// Riemann zeta on C \ {1}. Euler-Maclaurin for Re(s) >= 0.5 and for the
/// disk |s| < 0.5 (where reflection would need zeta(1)); the functional
/// equation everywhere else.
/// PoleError inside pole_exclusion_radius of s = 1.
SeriesEvaluation zeta(Complex s, const EvalConfig& cfg = {});

/// zeta(s) - 1 without the cancellation: the Euler-Maclaurin sum starts at
/// n = 2 for Re(s) >= 0.5, so the result keeps full relative accuracy as
/// zeta(s) -> 1.
SeriesEvaluation zeta_minus_one(Complex s, const EvalConfig& cfg = {});

/// Residue limits eps * zeta(1 + eps) -> 1 and eps * Gamma(eps) -> 1.
struct ResidueCheck {
    IdentityReport zeta;
    IdentityReport gamma;
    bool passed() const { return zeta.passed && gamma.passed; }
};

/// Extrapolates both residue sequences to eps -> 0; each row passes when its
/// limit is within `tol` of 1.
ResidueCheck residue_check(std::span<const double> eps_sequence, const EvalConfig& cfg = {}, double tol = 1e-8);

}  // namespace monocont
