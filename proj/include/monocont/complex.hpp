#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "monocont/errors.hpp"

namespace monocont {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLnPi = 1.144729885849400174143427351353058712;
inline constexpr double kLn2Pi = 1.837877066409345483560659472811235279;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Throws DomainError naming `what` when z carries a NaN or an infinity.
inline Complex checked(Complex z, const char* what) {
    if (!is_finite(z)) {
        throw DomainError(std::string("non-finite result in ") + what);
    }
    return z;
}

/// sin(pi x) for real x, exact zeros at the integers.
double sinpi(double x);
/// cos(pi x) for real x, exact zeros at the half-integers.
double cospi(double x);
/// sin(pi z) for complex z.
Complex sinpi(Complex z);

/// Returns the nearest integer m when |z - m| < radius.
std::optional<long> snap_to_integer(Complex z, double radius);

/// n^(-s) = exp(-s ln n) for a positive real base.
inline Complex real_pow(double base, Complex exponent) { return std::exp(exponent * std::log(base)); }

/// "re,im" with 17 significant digits; the inverse of parse_complex.
std::string format_complex(Complex z);

/// Parses "re,im" (comma, no spaces) or a bare real "re".
Complex parse_complex(const std::string& text);

}  // namespace monocont

namespace monocont {

/// e^z - 1 without cancellation for small |z|.
inline Complex expm1(Complex z) {
    const double half_sin = std::sin(0.5 * z.imag());
    return {std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * half_sin * half_sin,
            std::exp(z.real()) * std::sin(z.imag())};
}

}  // namespace monocont
