#pragma once

#include <functional>

#include "monocont/complex.hpp"

namespace monocont {

/// Result of a numerical integral.
struct QuadratureResult {
    Complex value{};
    long nodes_used = 0;
    double error_estimate = 0.0;
    double t_max = 0.0;  ///< upper truncation point (interval end for finite ranges)
    bool converged = false;
};

/// Tanh-sinh (double-exponential) quadrature of f over [a, b]. Integrable
/// algebraic endpoint singularities are fine: nodes cluster doubly
/// exponentially and f is never evaluated at the endpoints themselves.
/// Refines by halving the step until two successive levels differ by less
/// than tol * |value|; error_estimate is that last difference.
QuadratureResult tanh_sinh(const std::function<Complex(double)>& f, double a, double b, double tol,
                           int max_level = 12);

}  // namespace monocont
