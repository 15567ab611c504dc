#include "monocont/gamma_binom.hpp"

#include <array>
#include <cmath>

#include "monocont/extrapolate.hpp"
#include "monocont/zeta.hpp"

namespace monocont {

namespace {

constexpr double kStirlingMinModulus = 15.0;

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// sum_k B_{2k} / (2k (2k-1) z^(2k-1)), the correction to Stirling's formula.
Complex stirling_series(Complex z) {
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    for (auto it = kStirlingCoeffs.rbegin(); it != kStirlingCoeffs.rend(); ++it) {
        series = series * inv2 + *it;
    }
    return series * inv;
}

Complex stirling(Complex z) { return (z - 0.5) * std::log(z) - z + 0.5 * kLn2Pi + stirling_series(z); }

Complex log_gamma_right(Complex z) {
    if (std::abs(z) >= kStirlingMinModulus) return stirling(z);
    const long shift = static_cast<long>(std::ceil(kStirlingMinModulus - z.real()));
    Complex logs = 0.0;
    for (long j = 0; j < shift; ++j) logs += std::log(z + static_cast<double>(j));
    return stirling(z + static_cast<double>(shift)) - logs;
}

// Principal log of sin(pi z), without overflowing cosh for large |Im z|.
Complex log_sinpi(Complex z) {
    if (std::abs(z.imag()) < 20.0) return std::log(sinpi(z));
    const bool lower = z.imag() < 0.0;
    const Complex w = lower ? std::conj(z) : z;
    // sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w}) for Im w > 0.
    double x = std::fmod(w.real(), 2.0);
    double im = kPi / 2.0 - kPi * x;
    const Complex correction = std::log(1.0 - std::exp(Complex(0.0, 2.0 * kPi) * Complex(x, w.imag())));
    double re = kPi * w.imag() - std::log(2.0) + correction.real();
    im += correction.imag();
    im = std::remainder(im, 2.0 * kPi);
    if (im <= -kPi) im += 2.0 * kPi;
    const Complex out(re, im);
    return lower ? std::conj(out) : out;
}

void require_not_pole(Complex z, double snap_radius, const char* what) {
    if (auto m = snap_to_integer(z, snap_radius); m && *m <= 0) {
        throw PoleError(std::string(what) + ": pole of Gamma at z=" + std::to_string(*m));
    }
}

// log(1 + w), accurate for small |w|.
Complex log1p(Complex w) {
    if (std::abs(w) > 0.5) return std::log(1.0 + w);
    const double re = 0.5 * std::log1p(w.real() * (2.0 + w.real()) + w.imag() * w.imag());
    return {re, std::atan2(w.imag(), 1.0 + w.real())};
}

// log Gamma(z + d) - log Gamma(z) for real z > 0 and Re(z + d) >= 0.5. When
// both arguments are in the Stirling range the O(z log z) parts cancel
// analytically: (z - 1/2) log(1 + d/z) + d log(z + d) - d + series terms.
Complex log_gamma_ratio(double z, Complex d) {
    const Complex w = z + d;
    if (z < kStirlingMinModulus || std::abs(w) < kStirlingMinModulus) {
        return log_gamma_right(w) - log_gamma_right(z);
    }
    return (z - 0.5) * log1p(d / z) + d * std::log(w) - d + stirling_series(w) - stirling_series(z);
}

// Largest head length multiplied out directly before switching to logs.
constexpr long kHeadProductMax = 150;

// (s)_k, or (s)_k / k!, along the log-gamma route. Every Gamma argument is
// kept in Re >= 0.5 so no reflection (and no sin(pi z)) is involved.
Complex falling_lgamma_route(Complex s, long k, bool divide_by_factorial) {
    const double kd = static_cast<double>(k);
    if (s.real() >= kd - 0.5) {
        const double lfact = divide_by_factorial ? std::lgamma(kd + 1.0) : 0.0;
        return std::exp(log_gamma_right(s + 1.0) - log_gamma_right(s - kd + 1.0) - lfact);
    }
    // (s)_k = (s)_j (-1)^(k-j) Gamma(k - s) / Gamma(j - s) with Re(j - s) >= 0.5.
    const long j = std::max(0L, static_cast<long>(std::ceil(s.real() + 0.5)));
    Complex log_tail = divide_by_factorial ? log_gamma_ratio(kd + 1.0, -s - 1.0) : log_gamma_right(kd - s);
    log_tail -= log_gamma_right(static_cast<double>(j) - s);
    Complex head = 1.0;
    if (j <= kHeadProductMax) {
        head = detail::falling_factorial_product(s, j);
    } else {
        for (long i = 0; i < j; ++i) log_tail += std::log(s - static_cast<double>(i));
    }
    // A huge head times a tiny tail: applying the tail in two halves keeps
    // the intermediate out of the denormal range.
    const Complex half = std::exp(0.5 * log_tail);
    const Complex v = (head * half) * half;
    return (k - j) % 2 != 0 ? -v : v;
}

bool snaps_below(Complex s, long k, double snap_radius) {
    auto m = snap_to_integer(s, snap_radius);
    return m && *m >= 0 && *m < k;
}

}  // namespace

Complex log_gamma(Complex z, double snap_radius) {
    require_not_pole(z, snap_radius, "log_gamma");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // Reflection, with the 2 pi i branch correction that keeps the result on
    // the analytic continuation of the principal branch.
    const double turns = std::copysign(2.0 * kPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
    return Complex(kLnPi, turns) - log_sinpi(z) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z, double snap_radius) {
    require_not_pole(z, snap_radius, "gamma");
    if (z.real() >= 0.5) return checked(std::exp(log_gamma_right(z)), "gamma");
    return checked(kPi / (sinpi(z) * std::exp(log_gamma_right(1.0 - z))), "gamma");
}

namespace detail {

Complex falling_factorial_product(Complex s, long k) {
    Complex acc = 1.0;
    for (long j = 0; j < k; ++j) acc *= s - static_cast<double>(j);
    return acc;
}

Complex falling_factorial_lgamma(Complex s, long k, double snap_radius) {
    if (k == 0) return 1.0;
    if (snaps_below(s, k, snap_radius)) return 0.0;
    return checked(falling_lgamma_route(s, k, false), "falling_factorial");
}

}  // namespace detail

Complex falling_factorial(Complex s, long k, double snap_radius) {
    if (k < 0) throw DomainError("falling_factorial: k must be >= 0");
    if (k <= kProductCutoff) return checked(detail::falling_factorial_product(s, k), "falling_factorial");
    return detail::falling_factorial_lgamma(s, k, snap_radius);
}

Complex binom(Complex s, long k, double snap_radius) {
    if (k < 0) throw DomainError("binom: k must be >= 0");
    if (snaps_below(s, k, snap_radius)) return 0.0;
    if (k <= kProductCutoff) {
        Complex acc = 1.0;
        for (long j = 0; j < k; ++j) acc *= (s - static_cast<double>(j)) / static_cast<double>(j + 1);
        return checked(acc, "binom");
    }
    return checked(falling_lgamma_route(s, k, true), "binom");
}

SeriesEvaluation alpha_limit(long p, std::span<const double> eps_sequence, const EvalConfig& cfg, double tol) {
    if (p < 1) throw DomainError("alpha_limit: p must be >= 1");
    const auto pd = static_cast<double>(p);
    return extrapolate_to_zero(
        eps_sequence, [&](double e) { return binom(pd - 1.0 + e, p) * zeta(1.0 - e, cfg).value; }, tol,
        "alpha_limit(p=" + std::to_string(p) + ")");
}

ExactRational alpha(long p) {
    if (p < 1) throw DomainError("alpha: p must be >= 1");
    return {-1, p};
}

}  // namespace monocont
