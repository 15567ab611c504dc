#pragma once

#include <string>

#include "monocont/complex.hpp"

namespace monocont {

/// Tolerances, truncation limits and quadrature parameters shared by every
/// evaluator. Defaults give ~1e-12 relative accuracy for |Im s| <= 50.
struct EvalConfig {
    double rel_tol = 1e-12;
    long max_terms = 10'000;
    int em_cutoff_N = 32;   ///< Euler-Maclaurin summation cutoff
    int em_order_M = 16;    ///< number of Bernoulli correction terms (even)
    double integer_snap_radius = 1e-9;
    double pole_exclusion_radius = 1e-8;
    double quad_tol = 1e-11;
    double quad_tmax_factor = 40.0;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

/// Value of a truncated infinite sum, extrapolation or quadrature.
struct SeriesEvaluation {
    Complex value{};
    long terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
    /// Free-form diagnostic; set e.g. when lambda runs inside the guard annulus.
    std::string note;
};

/// Absolute floor under which a value counts as zero for convergence tests.
inline constexpr double kZeroFloor = 1e-300;

/// Whether tail <= tol |value| (or the absolute floor when value is ~0).
inline bool tail_within(double tail, Complex value, double tol) {
    return tail <= tol * std::abs(value) || tail <= kZeroFloor;
}

/// How IdentityReport::passed is decided.
enum class Criterion {
    relative,  ///< rel_error <= tol
    absolute,  ///< abs_error <= tol; identities whose exact value is zero
};

/// One verified identity instance.
struct IdentityReport {
    std::string identity_id;
    Complex point{};
    Complex lhs{};
    Complex rhs{};
    double abs_error = 0.0;
    double rel_error = 0.0;
    bool passed = false;
    long terms_used = 0;
};

/// rel_error = |lhs - rhs| / |rhs|, or |lhs - rhs| when rhs == 0.
inline double relative_error(Complex lhs, Complex rhs) {
    const double diff = std::abs(lhs - rhs);
    const double scale = std::abs(rhs);
    return scale > 0.0 ? diff / scale : diff;
}

IdentityReport make_report(std::string id, Complex point, Complex lhs, Complex rhs, double tol,
                           long terms_used, Criterion criterion = Criterion::relative);

}  // namespace monocont
