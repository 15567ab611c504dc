#include <cmath>

#include "monocont/errors.hpp"
#include "monocont/gamma_binom.hpp"
#include "monocont/mu_series.hpp"
#include "support.hpp"

using namespace monocont;
using monocont::testing::Sampler;

TEST_SUITE("mu_series") {

TEST_CASE("P_n closed form") {
    CHECK_REL(p_n_closed(2, 3.0), 3.0 / 8.0, 1e-15);
    CHECK_REL(p_n_closed(2, 0.0), 1.0, 1e-15);
    CHECK_REL(p_n_closed(3, 2.0), 1.0 / 6.0, 1e-15);
    CHECK_THROWS_AS(p_n_closed(7, 1.0), PoleError);
    CHECK_REL(p_n_closed(7, 1.0 + 1e-6), 0.15415067982725830429, 1e-5);
    CHECK_REL(p_n_closed(2, Complex(0.5, 3.0)), Complex(0.30931750064121254155, -0.61445762033593532735), 1e-14);
    CHECK_REL(p_n_closed(50, Complex(-4.0, 2.0)), Complex(298892.13623045754229, -5997098.2388533508345), 1e-13);
    CHECK_REL(p_n_closed(3, Complex(-2.5, -1.5)), Complex(1.5614402101367045951, 9.8653754209259320765), 1e-14);
    CHECK_REL(p_n_closed(1000, Complex(2.0, 10.0)), Complex(1.0000934077561580327e-6, 4.2518483195769305005e-8), 1e-13);
}

TEST_CASE("P_n series examples") {
    CHECK_REL(p_n_series(2, 3.0).value, 3.0 / 8.0, 1e-12);
    const Complex s(-2.5, 1.5);
    CHECK_REL(p_n_series(5, s).value, p_n_closed(5, s), 1e-12);
    CHECK_REL(p_n_series(1000, Complex(2.0, 10.0)).value,
              Complex(1.0000934077561580327e-6, 4.2518483195769305005e-8), 1e-12);
}

TEST_CASE("P_n term ratio tends to 1/n") {
    const auto terms = p_n_terms(4, Complex(0.3, 2.0), 200);
    const double ratio = std::abs(terms[199] / terms[198]);
    CHECK(ratio == doctest::Approx(0.25).epsilon(4e-3));
}

TEST_CASE("P_n series equals the closed form") {
    Sampler rng(31);
    int checked = 0;
    while (checked < 100) {
        const Complex s = rng.box(-8.0, 8.0, -8.0, 8.0);
        if (std::abs(s - 1.0) <= 0.1) continue;
        ++checked;
        for (long n = 2; n <= 50; ++n) {
            CAPTURE(s);
            CAPTURE(n);
            const auto r = p_n_series(n, s);
            CHECK(r.converged);
            CHECK_REL(r.value, p_n_closed(n, s), 1e-10);
        }
    }
}

TEST_CASE("P_n partial sums telescope") {
    Sampler rng(32);
    for (int i = 0; i < 50; ++i) {
        const Complex s = rng.box(-4.0, 4.0, -4.0, 4.0);
        const long N = rng.integer(2, 300);
        Complex sum = 0.0;
        double scale = 0.0;
        for (long n = 2; n <= N; ++n) {
            const Complex p = p_n_closed(n, s);
            sum += p;
            scale += std::abs(p);
        }
        CAPTURE(s);
        CAPTURE(N);
        const Complex want = (real_pow(static_cast<double>(N), 1.0 - s) - 1.0) / (1.0 - s);
        CHECK(std::abs(sum - want) <= 1e-13 * std::max(scale, 1.0));
    }
}

TEST_CASE("mu and its functional equation") {
    CHECK_REL(mu(2.0), 1.0, 0.0);
    CHECK_REL(mu(0.0), -1.0, 0.0);
    CHECK_REL(mu(-1.0), -0.5, 0.0);
    CHECK_THROWS_AS(mu(1.0), PoleError);
    for (Complex s : {Complex(3.0, 0.0), Complex(1.0, 5.0), Complex(0.5, 0.0)}) {
        CHECK(mu_functional_check(s).passed);
    }
    Sampler rng(33);
    for (int i = 0; i < 500; ++i) {
        const Complex s = rng.box(-50.0, 50.0, -50.0, 50.0);
        if (std::abs(s - 1.0) < 0.05) continue;
        CAPTURE(s);
        CHECK(std::abs(mu(s) + mu(2.0 - s)) < 1e-14);
    }
}

TEST_CASE("mu_direct in the convergent region") {
    CHECK_REL(mu_direct(2.0).value, 1.0, 1e-10);
    CHECK_REL(mu_direct(3.0).value, 0.5, 1e-10);
    CHECK_REL(mu_direct(Complex(2.5, 4.0)).value, 1.0 / Complex(1.5, 4.0), 1e-10);
    CHECK_THROWS_AS(mu_direct(1.02), DomainError);
    CHECK_THROWS_AS(mu_direct(Complex(-1.0, 3.0)), DomainError);
}

TEST_CASE("lambda examples") {
    for (Complex s : {Complex(2.5, 0.0), Complex(2.0, 3.0), Complex(-3.0, 0.0), Complex(0.5, -4.0)}) {
        CAPTURE(s);
        const auto r = lambda(s);
        CHECK(r.converged);
        CHECK_ABS(r.value, 1.0, 1e-9);
    }
    CHECK(lambda(-3.0).note == "integer_exact");
    CHECK(lambda(Complex(-2.0 + 5e-4, 0.0)).note == "near-singular term cancellation");
    CHECK_THROWS_AS(lambda(1.0), PoleError);
}

TEST_CASE("lambda is one across a random sample") {
    Sampler rng(34);
    for (int i = 0; i < 150; ++i) {
        const Complex s = rng.box(-5.0, 5.0, -5.0, 5.0);
        if (std::abs(s - 1.0) < 0.05) continue;
        CAPTURE(s);
        CHECK_ABS(lambda(s).value, 1.0, 1e-9);
    }
}

TEST_CASE("lambda routing") {
    CHECK(lambda_routing(Complex(-4.0, 0.0)).mode == LambdaRouting::Mode::integer_exact);
    CHECK(lambda_routing(Complex(-4.0, 0.0)).snapped_integer == -4);
    CHECK(lambda_routing(Complex(-4.0, 1e-7)).mode == LambdaRouting::Mode::generic_series);
    CHECK(lambda_routing(Complex(2.0, 0.0)).mode == LambdaRouting::Mode::generic_series);
}

TEST_CASE("lambda terms vanish past a nonnegative integer 1-s") {
    for (long m = 0; m >= -8; --m) {
        const double s = static_cast<double>(m);
        for (long k = 3 - m; k <= 40; ++k) CHECK(lambda_term(s, k) == Complex(0.0, 0.0));
    }
}

TEST_CASE("exact integer path") {
    for (long m = 0; m >= -20; --m) {
        CHECK(lambda_integer_exact(m) == ExactRational(1));
        CHECK(beta_exact(m) == sign_power(-m) / ExactRational(2 - m) + ExactRational(1));
    }
    CHECK(beta_exact(0).str() == "3/2");
    CHECK(beta_exact(-1).str() == "2/3");
    CHECK(beta_exact(-2).str() == "5/4");
    CHECK_THROWS_AS(beta_exact(1), DomainError);
}

TEST_CASE("Dirichlet form of mu") {
    CHECK_REL(mu_dirichlet(-1.0).value, -0.5, 1e-9);
    CHECK_REL(mu_dirichlet(Complex(0.5, 2.0)).value, 1.0 / Complex(-0.5, 2.0), 1e-9);
    CHECK_REL(mu_dirichlet(3.0).value, mu_direct(3.0).value, 1e-9);
}

TEST_CASE("Goldbach-type sum") {
    const auto g = goldbach_sum();
    CHECK(g.converged);
    CHECK_ABS(g.value, 1.0, 1e-11);
    CHECK(g.tail_estimate < 2e-12);
    CHECK_REL(goldbach_partial(2).value, 0.64493406684822643647, 1e-13);
    CHECK_THROWS_AS(goldbach_partial(1), DomainError);
}

TEST_CASE("alternative binomial form") {
    CHECK(apostol_form_check(2.5).passed);
    CHECK(apostol_form_check(Complex(3.0, 1.0)).passed);
    // k = 3 term at s = 2 under the reflection of the binomial
    const Complex s = 2.0;
    CHECK_REL(-binom(1.0 - s, 3), binom(3.0 + s - 2.0, 3), 1e-15);
}

TEST_CASE("lower limit zero") {
    CHECK_REL(mu_lower_limit_zero(0.5), 2.0, 1e-15);
    CHECK_REL(mu_lower_limit_zero(0.0), 1.0, 1e-15);
    CHECK_REL(mu_lower_limit_zero(3.0), -0.5, 1e-15);
    for (Complex s : {Complex(0.5, 0.0), Complex(-2.0, 1.0), Complex(0.9, -3.0)}) {
        CAPTURE(s);
        const auto q = integral_zero_to_one(s);
        CHECK(q.converged);
        CHECK_REL(q.value, mu_lower_limit_zero(s), 1e-9);
    }
}

}  // TEST_SUITE
