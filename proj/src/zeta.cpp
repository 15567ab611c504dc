#include "monocont/zeta.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "monocont/bernoulli.hpp"
#include "monocont/extrapolate.hpp"
#include "monocont/gamma_binom.hpp"

namespace monocont {

namespace {

// B_{2j} / (2j)! for j = 1..count.
const std::vector<double>& em_coefficients(int count) {
    static const std::vector<double> table = [] {
        std::vector<double> out;
        ExactRational factorial(1);
        for (long j = 1; j <= 60; ++j) {
            factorial *= ExactRational((2 * j - 1) * (2 * j));
            out.push_back((bernoulli_exact(2 * j) / factorial).to_double());
        }
        return out;
    }();
    if (count > static_cast<int>(table.size())) throw DomainError("em_order_M too large");
    return table;
}

void require_off_pole(Complex s, const EvalConfig& cfg, const char* what) {
    if (std::abs(s - 1.0) <= cfg.pole_exclusion_radius) {
        throw PoleError(std::string(what) + ": pole at s=1");
    }
}

struct EulerMaclaurin {
    Complex value;
    double remainder;
    long terms;
};

// sum_{n>=first} n^{-s} via Euler-Maclaurin with cutoff n_cut and `order` corrections.
EulerMaclaurin euler_maclaurin(Complex s, int first, long n_cut, int order) {
    const auto& coeffs = em_coefficients(order + 1);
    Complex partial = 0.0;
    for (long n = first; n < n_cut; ++n) partial += real_pow(static_cast<double>(n), -s);

    const double nd = static_cast<double>(n_cut);
    const Complex n_pow = real_pow(nd, -s);
    Complex tail = n_pow * nd / (s - 1.0) + 0.5 * n_pow;
    // term_j = B_{2j}/(2j)! * s (s+1) ... (s+2j-2) * N^{-s-2j+1}
    Complex rising = s;
    Complex power = n_pow / nd;
    Complex next = 0.0;
    for (int j = 1; j <= order + 1; ++j) {
        const Complex term = coeffs[static_cast<std::size_t>(j - 1)] * rising * power;
        if (j <= order) {
            tail += term;
        } else {
            next = term;
        }
        rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
        power /= nd * nd;
    }
    return {partial + tail, std::abs(next), n_cut - first + order};
}

// Doubles the cutoff until the first omitted correction is below rel_tol |value|.
SeriesEvaluation summed(Complex s, int first, const EvalConfig& cfg, const char* what) {
    long n_cut = cfg.em_cutoff_N;
    for (;;) {
        const auto em = euler_maclaurin(s, first, n_cut, cfg.em_order_M);
        checked(em.value, what);
        if (tail_within(em.remainder, em.value, cfg.rel_tol)) {
            return {em.value, em.terms, em.remainder, true, {}};
        }
        if (2 * n_cut > cfg.max_terms) {
            throw NonConvergence(std::string(what) + ": Euler-Maclaurin remainder above tolerance at s=" +
                                 format_complex(s));
        }
        n_cut *= 2;
    }
}

bool use_direct_branch(Complex s) { return s.real() >= 0.5 || std::abs(s) < 0.5; }

}  // namespace

SeriesEvaluation zeta(Complex s, const EvalConfig& cfg) {
    require_off_pole(s, cfg, "zeta");
    if (use_direct_branch(s)) return summed(s, 1, cfg, "zeta");

    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const SeriesEvaluation reflected = summed(1.0 - s, 1, cfg, "zeta");
    const Complex factor =
        std::exp(s * std::log(2.0) + (s - 1.0) * kLnPi + log_gamma(1.0 - s, cfg.integer_snap_radius)) *
        sinpi(0.5 * s);
    SeriesEvaluation out = reflected;
    out.value = checked(factor * reflected.value, "zeta");
    out.tail_estimate = std::abs(factor) * reflected.tail_estimate;
    return out;
}

SeriesEvaluation zeta_minus_one(Complex s, const EvalConfig& cfg) {
    require_off_pole(s, cfg, "zeta_minus_one");
    if (use_direct_branch(s)) return summed(s, 2, cfg, "zeta_minus_one");
    SeriesEvaluation out = zeta(s, cfg);
    out.value -= 1.0;
    return out;
}

ResidueCheck residue_check(std::span<const double> eps_sequence, const EvalConfig& cfg, double tol) {
    // Lower bound on the achievable extrapolation accuracy in double precision.
    constexpr double kStabilityTol = 1e-10;
    const auto z = extrapolate_to_zero(
        eps_sequence, [&](double e) { return e * zeta(1.0 + e, cfg).value; }, kStabilityTol, "residue_check(zeta)");
    const auto g = extrapolate_to_zero(
        eps_sequence, [&](double e) { return e * gamma(e, cfg.integer_snap_radius); }, kStabilityTol,
        "residue_check(gamma)");
    return {make_report("zeta_residue", 1.0, z.value, 1.0, tol, z.terms_used),
            make_report("gamma_residue", 0.0, g.value, 1.0, tol, g.terms_used)};
}

}  // namespace monocont
