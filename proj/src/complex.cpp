#include "monocont/complex.hpp"

#include <charconv>
#include <cstdio>

namespace monocont {

namespace {

// Reduces x to r in [-1, 1] with x = r + 2j, so sinpi/cospi keep exact zeros.
double reduce_mod2(double x) {
    double r = std::fmod(x, 2.0);
    if (r > 1.0) r -= 2.0;
    if (r < -1.0) r += 2.0;
    return r;
}

}  // namespace

double sinpi(double x) {
    if (x == std::floor(x)) return 0.0;
    const double r = reduce_mod2(x);
    // sin(pi r) = sin(pi (1 - r)) keeps the argument small near the zeros.
    if (r > 0.5) return std::sin(kPi * (1.0 - r));
    if (r < -0.5) return -std::sin(kPi * (1.0 + r));
    return std::sin(kPi * r);
}

double cospi(double x) { return sinpi(x + 0.5); }

Complex sinpi(Complex z) {
    const double y = kPi * z.imag();
    return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

std::optional<long> snap_to_integer(Complex z, double radius) {
    const double m = std::round(z.real());
    if (std::abs(z - Complex(m, 0.0)) < radius) return static_cast<long>(m);
    return std::nullopt;
}

std::string format_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
    return buf;
}

Complex parse_complex(const std::string& text) {
    auto parse_real = [&](std::string_view part) {
        double v = 0.0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, v);
        if (ec != std::errc() || ptr != end || part.empty()) {
            throw std::invalid_argument("malformed complex number '" + text + "' (expected re,im)");
        }
        return v;
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text), 0.0};
    const std::string_view sv(text);
    return {parse_real(sv.substr(0, comma)), parse_real(sv.substr(comma + 1))};
}

}  // namespace monocont
