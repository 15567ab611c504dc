#include "monocont/abel_plana.hpp"

#include <cmath>
#include <string>

#include "monocont/gamma_binom.hpp"
#include "monocont/zeta.hpp"

namespace monocont {

namespace {

void require_left_half_plane(Complex s, const char* what) {
    if (!(s.real() < 0.0)) throw DomainError(std::string(what) + ": requires Re(s) < 0");
}

// 1/(e^x - 1) - 1/x + 1/2, by its Taylor series where the closed form cancels.
double bose_remainder(double x) {
    if (x < 0.1) {
        const double x2 = x * x;
        return x * (1.0 / 12 + x2 * (-1.0 / 720 + x2 * (1.0 / 30240 + x2 * (-1.0 / 1209600 + x2 / 47900160))));
    }
    return 1.0 / std::expm1(x) - 1.0 / x + 0.5;
}

}  // namespace

QuadratureResult bose_integral(Complex s, double scale, const EvalConfig& cfg) {
    require_left_half_plane(s, "bose_integral");
    if (!(scale > 0.0)) throw DomainError("bose_integral: scale must be > 0");

    const auto integrand = [&](double t) { return real_pow(t, -s) / std::expm1(scale * t); };
    const double head_end = std::min(1.0, cfg.quad_tmax_factor / scale);

    // On the head, 1/(e^x - 1) = 1/x - 1/2 + g(x) with g(x) = O(x). The two
    // singular terms integrate in closed form; t^(-s) g(scale t) vanishes at 0.
    const auto regular = [&](double t) { return real_pow(t, -s) * bose_remainder(scale * t); };
    const Complex singular = real_pow(head_end, -s) / (-s * scale) - real_pow(head_end, 1.0 - s) / (2.0 * (1.0 - s));
    auto head = tanh_sinh(regular, 0.0, head_end, cfg.quad_tol);
    // The singular terms can cancel most of the regular part, so its
    // tolerance is rescaled to the magnitude of the sum.
    for (int attempt = 0; attempt < 3 && head.converged; ++attempt) {
        const double total = std::abs(head.value + singular);
        if (head.error_estimate <= 0.5 * cfg.quad_tol * total) break;
        const double scaled = 0.5 * cfg.quad_tol * total / std::max(std::abs(head.value), kZeroFloor);
        head = tanh_sinh(regular, 0.0, head_end, std::max(scaled, 1e-15));
    }
    head.value += singular;

    double t_max = std::max(head_end, cfg.quad_tmax_factor / scale);
    QuadratureResult body;
    double beyond = 0.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        body = t_max > head_end ? tanh_sinh(integrand, head_end, t_max, cfg.quad_tol) : QuadratureResult{};
        // t^(-sigma) e^(-scale t) past t_max, bounded by its value over the decay rate
        const double decay = scale + s.real() / t_max;
        beyond = decay > 0.0 ? std::abs(integrand(t_max)) / decay : INFINITY;
        if (beyond <= 0.1 * cfg.quad_tol * std::abs(head.value + body.value)) break;
        t_max *= 1.5;
    }

    QuadratureResult out;
    out.value = head.value + body.value;
    out.nodes_used = head.nodes_used + body.nodes_used;
    out.error_estimate = head.error_estimate + body.error_estimate + beyond;
    out.t_max = t_max;
    out.converged = head.converged && (body.converged || t_max <= head_end) &&
                    tail_within(out.error_estimate, out.value, cfg.quad_tol);
    if (!out.converged) {
        throw NonConvergence("bose_integral: quadrature did not reach quad_tol at s=" + format_complex(s));
    }
    return out;
}

IdentityReport sin_identity_check(Complex s, double tol) {
    const Complex i(0.0, 1.0);
    const Complex lhs = std::pow(i, 1.0 - s) + std::pow(-i, 1.0 - s);
    const Complex rhs = 2.0 * sinpi(0.5 * s);
    IdentityReport r = make_report("sin_identity", s, lhs, rhs, tol, 2, Criterion::absolute);
    r.passed = r.abs_error <= tol * std::max(1.0, std::abs(rhs));
    return r;
}

IdentityReport abel_plana_zeta_check(Complex s, const EvalConfig& cfg, double tol) {
    require_left_half_plane(s, "abel_plana_zeta_check");
    const auto near = snap_to_integer(s, kTrivialZeroBand);
    const bool trivial_zero = near && *near < 0 && *near % 2 == 0;
    if (trivial_zero && std::abs(s - static_cast<double>(*near)) < cfg.integer_snap_radius) {
        throw DomainError("abel_plana_zeta_check: s is a trivial zero (" + std::to_string(*near) + ")");
    }
    const auto integral = bose_integral(s, kTwoPi, cfg);
    const Complex lhs = 2.0 * sinpi(0.5 * s) * integral.value;
    const auto z = zeta(s, cfg);
    return trivial_zero
               ? make_report("abel_plana_zeta", s, lhs, z.value, kTrivialZeroAbsTol, integral.nodes_used,
                             Criterion::absolute)
               : make_report("abel_plana_zeta", s, lhs, z.value, tol, integral.nodes_used);
}

IdentityReport gamma_zeta_integral_check(Complex s, const EvalConfig& cfg, double tol) {
    require_left_half_plane(s, "gamma_zeta_integral_check");
    const auto integral = bose_integral(s, 1.0, cfg);
    const Complex rhs = gamma(1.0 - s, cfg.integer_snap_radius) * zeta(1.0 - s, cfg).value;
    return make_report("gamma_zeta_integral", s, integral.value, rhs, tol, integral.nodes_used);
}

}  // namespace monocont
