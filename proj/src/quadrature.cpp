#include "monocont/quadrature.hpp"

#include <cmath>

namespace monocont {

namespace {

// Beyond |t| = 6 the weights are below 1e-270.
constexpr double kTLimit = 6.0;
constexpr int kMinLevel = 3;

}  // namespace

QuadratureResult tanh_sinh(const std::function<Complex(double)>& f, double a, double b, double tol, int max_level) {
    const double width = b - a;
    long nodes = 0;

    // Contribution of the node at parameter t, weight included.
    auto node = [&](double t) -> Complex {
        const double ps = kPi * std::sinh(t);
        const double u = 1.0 / (1.0 + std::exp(-ps));   // position in (0, 1)
        const double v = 1.0 / (1.0 + std::exp(ps));    // 1 - u, no cancellation
        const double w = kPi * std::cosh(t) * u * v;
        if (u == 0.0 || v == 0.0 || w == 0.0) return 0.0;
        const double x = u < 0.5 ? a + width * u : b - width * v;
        if (x <= a || x >= b) return 0.0;
        ++nodes;
        return width * w * f(x);
    };

    double h = 1.0;
    Complex sum = node(0.0);
    for (int k = 1; k * h <= kTLimit; ++k) sum += node(k * h) + node(-k * h);
    Complex estimate = h * sum;

    QuadratureResult out;
    out.t_max = b;
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        for (double t = h; t <= kTLimit; t += 2.0 * h) sum += node(t) + node(-t);
        const Complex refined = h * sum;
        const double diff = std::abs(refined - estimate);
        estimate = refined;
        out.value = estimate;
        out.error_estimate = diff;
        out.nodes_used = nodes;
        if (level >= kMinLevel && (diff <= tol * std::abs(estimate) || diff == 0.0)) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

}  // namespace monocont
