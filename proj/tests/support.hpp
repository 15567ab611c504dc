#pragma once

#include <doctest.h>

#include <complex>
#include <random>

#include "monocont/complex.hpp"

namespace monocont::testing {

inline double rel_err(Complex got, Complex want) {
    const double scale = std::abs(want);
    return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got - want);
}

#define CHECK_REL(got, want, tol)                                                          \
    do {                                                                                   \
        const ::monocont::Complex got_ = (got);                                            \
        const ::monocont::Complex want_ = (want);                                          \
        INFO("got " << ::monocont::format_complex(got_) << " want " << ::monocont::format_complex(want_)); \
        CHECK(::monocont::testing::rel_err(got_, want_) <= (tol));                         \
    } while (0)

#define CHECK_ABS(got, want, tol)                                                          \
    do {                                                                                   \
        const ::monocont::Complex got_ = (got);                                            \
        const ::monocont::Complex want_ = (want);                                          \
        INFO("got " << ::monocont::format_complex(got_) << " want " << ::monocont::format_complex(want_)); \
        CHECK(std::abs(got_ - want_) <= (tol));                                            \
    } while (0)

/// Deterministic source of sample points.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);
        return {re, uniform(im_lo, im_hi)};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace monocont::testing
