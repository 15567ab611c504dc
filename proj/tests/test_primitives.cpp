#include <cmath>
#include <vector>

#include "monocont/config.hpp"
#include "monocont/errors.hpp"
#include "monocont/extrapolate.hpp"
#include "monocont/quadrature.hpp"
#include "monocont/rational.hpp"
#include "monocont/series.hpp"
#include "support.hpp"

using namespace monocont;

TEST_SUITE("primitives") {

TEST_CASE("complex parsing round-trips") {
    CHECK(parse_complex("-1,0") == Complex(-1.0, 0.0));
    CHECK(parse_complex("2.5") == Complex(2.5, 0.0));
    CHECK(parse_complex("1e-3,-4.25") == Complex(1e-3, -4.25));
    const Complex z(0.1, -1.0 / 3.0);
    CHECK(parse_complex(format_complex(z)) == z);
    CHECK_THROWS_AS(parse_complex("1, 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
}

TEST_CASE("sinpi vanishes exactly at integers") {
    for (int n = -20; n <= 20; ++n) CHECK(sinpi(static_cast<double>(n)) == 0.0);
    CHECK(cospi(0.5) == 0.0);
    CHECK(cospi(-7.5) == 0.0);
    CHECK(sinpi(0.5) == doctest::Approx(1.0).epsilon(1e-16));
    CHECK_REL(sinpi(Complex(0.25, 1.0)), std::sin(kPi * Complex(0.25, 1.0)), 1e-15);
}

TEST_CASE("integer snapping") {
    CHECK(snap_to_integer(Complex(-3.0 + 1e-10, 0.0), 1e-9) == -3);
    CHECK(snap_to_integer(Complex(-3.0, 2e-9), 1e-9) == std::nullopt);
    CHECK(snap_to_integer(Complex(0.5, 0.0), 1e-3) == std::nullopt);
}

TEST_CASE("expm1 keeps relative accuracy near zero") {
    const Complex z(1e-10, -2e-11);
    CHECK_REL(monocont::expm1(z), z + 0.5 * z * z, 1e-15);
    CHECK_REL(monocont::expm1(Complex(1.0, 2.0)), std::exp(Complex(1.0, 2.0)) - 1.0, 1e-15);
}

TEST_CASE("exact rationals") {
    const ExactRational a(1, 3);
    const ExactRational b(-1, 6);
    CHECK((a + b).str() == "1/6");
    CHECK((a * b).str() == "-1/18");
    CHECK((a / b).str() == "-2");
    CHECK(ExactRational(4, -8).str() == "-1/2");
    CHECK(a > b);
    CHECK_THROWS_AS(ExactRational(1, 0), DomainError);
    CHECK_THROWS_AS(a / ExactRational(0), DomainError);
    CHECK(binomial_exact(40, 20).get_str() == "137846528820");
    CHECK(sign_power(3) == ExactRational(-1));
}

TEST_CASE("config validation") {
    EvalConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.max_terms = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.em_order_M = 7;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("identity reports recompute from their own fields") {
    const auto r = make_report("x", 0.0, Complex(1.0 + 1e-10, 0.0), 1.0, 1e-9, 3);
    CHECK(r.passed);
    CHECK(r.rel_error == doctest::Approx(std::abs(r.lhs - r.rhs) / std::abs(r.rhs)));
    const auto zero = make_report("z", 0.0, 1e-15, 0.0, 1e-14, 1, Criterion::absolute);
    CHECK(zero.passed);
    CHECK(zero.rel_error == zero.abs_error);
    CHECK_FALSE(make_report("f", 0.0, 2.0, 1.0, 1e-3, 1).passed);
}

TEST_CASE("series accumulator stops on a geometric series") {
    SeriesAccumulator acc(1e-12);
    Complex term = 1.0;
    while (!acc.add(term) && acc.terms() < 1000) term *= 0.5;
    CHECK(acc.converged());
    CHECK_REL(acc.value(), 2.0, 1e-12);
    CHECK(acc.tail_estimate() <= 1e-12 * 2.0);
    CHECK(std::abs(acc.value() - 2.0) <= acc.tail_estimate());
}

TEST_CASE("series accumulator respects the hold index") {
    SeriesAccumulator acc(1e-12, 5);
    CHECK_FALSE(acc.add(0.0));
    CHECK_FALSE(acc.add(0.0));
    CHECK_FALSE(acc.add(0.0));
    CHECK_FALSE(acc.add(0.0));
    acc.add(1.0);
    CHECK(acc.terms() == 5);
    CHECK_FALSE(acc.converged());
}

TEST_CASE("series accumulator refuses a slowly decaying series") {
    SeriesAccumulator acc(1e-12);
    for (long n = 1; n <= 5000 && !acc.add(1.0 / static_cast<double>(n)); ++n) {
    }
    CHECK_FALSE(acc.converged());
}

TEST_CASE("extrapolation to zero") {
    const auto eps = halving_sequence(0.1, 10);
    const auto r = extrapolate_to_zero(eps, [](double e) { return Complex(std::exp(e) - e * e * e, 0.0); }, 1e-12, "exp");
    CHECK(r.converged);
    CHECK_ABS(r.value, 1.0, 1e-12);

    const std::vector<double> bad = {0.1, 0.2};
    CHECK_THROWS_AS(extrapolate_to_zero(bad, [](double) { return Complex(1.0); }, 1e-12, "bad"), DomainError);
    const std::vector<double> big = {0.5, 0.1};
    CHECK_THROWS_AS(extrapolate_to_zero(big, [](double) { return Complex(1.0); }, 1e-12, "big"), DomainError);
    const auto short_eps = halving_sequence(0.1, 3);
    CHECK_THROWS_AS(
        extrapolate_to_zero(short_eps, [](double e) { return Complex(std::sin(1.0 / e), 0.0); }, 1e-14, "wild"),
        NonConvergence);
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
    const auto sqrt_inv = tanh_sinh([](double x) { return Complex(1.0 / std::sqrt(x), 0.0); }, 0.0, 1.0, 1e-12);
    CHECK(sqrt_inv.converged);
    CHECK_REL(sqrt_inv.value, 2.0, 1e-12);
    const auto log_int = tanh_sinh([](double x) { return Complex(std::log(x), 0.0); }, 0.0, 1.0, 1e-12);
    CHECK_REL(log_int.value, -1.0, 1e-12);
    const auto smooth = tanh_sinh([](double x) { return Complex(std::cos(x), std::sin(x)); }, 0.0, 2.0, 1e-13);
    CHECK_REL(smooth.value, Complex(std::sin(2.0), 1.0 - std::cos(2.0)), 1e-13);
}

}  // TEST_SUITE
