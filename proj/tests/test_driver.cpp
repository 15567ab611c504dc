#include <sstream>

#include "monocont/errors.hpp"
#include "monocont/sweep.hpp"
#include "monocont/verify.hpp"
#include "support.hpp"

using namespace monocont;

TEST_SUITE("driver") {

TEST_CASE("grid parsing") {
    const auto g = parse_grid("-5:5,-2.5:2.5,21x11");
    CHECK(g.re_min == -5.0);
    CHECK(g.im_max == 2.5);
    CHECK(g.re_steps == 21);
    CHECK(g.im_steps == 11);
    CHECK(g.size() == 231);
    CHECK(format_grid(g) == "-5:5,-2.5:2.5,21x11");
    CHECK(g.point(0) == Complex(-5.0, -2.5));
    CHECK(g.point(1) == Complex(-5.0, -2.0));
    CHECK(g.point(230) == Complex(5.0, 2.5));
    CHECK_THROWS_AS(parse_grid("5:-5,0:1,2x2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("-5:5,-5:5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_grid("-5:5,-5:5,0x3"), std::invalid_argument);
}

TEST_CASE("series exclusions cover the pole and the integers") {
    GridSpec g;
    g.exclusions = series_exclusions(g);
    CHECK(g.excluded(1.0));
    CHECK(g.excluded(Complex(1.03, 0.0)));
    CHECK(g.excluded(-5.0));
    CHECK(g.excluded(Complex(0.0, 5e-4)));
    CHECK_FALSE(g.excluded(Complex(-5.0, 0.5)));
    CHECK_FALSE(g.excluded(2.0));
}

TEST_CASE("sweep of mu flags only the pole cell") {
    GridSpec g = parse_grid("-5:5,-5:5,11x11");
    g.exclusions = default_exclusions(Function::mu, g);
    const auto rows = sweep(Function::mu, g, {}, Execution::serial());
    REQUIRE(rows.size() == 121);
    long excluded = 0;
    for (const auto& r : rows) {
        if (r.status == PointStatus::excluded) {
            ++excluded;
            CHECK(r.s == Complex(1.0, 0.0));
        } else {
            CHECK(r.status == PointStatus::ok);
        }
    }
    CHECK(excluded == 1);
}

TEST_CASE("sweep records errors in-row") {
    // im in {-1, 0}; the im = 0 points sit at odd indices
    GridSpec g = parse_grid("-2:2,-1:0,5x2");
    const auto rows = sweep(Function::zeta, g, {}, Execution::serial());
    CHECK(rows[7].s == Complex(1.0, 0.0));
    CHECK(rows[7].status == PointStatus::pole);
    CHECK(rows[1].status == PointStatus::ok);
    const auto beta_rows = sweep(Function::beta, g, {}, Execution::serial());
    CHECK(beta_rows[9].status == PointStatus::domain_error);
    CHECK(beta_rows[0].status == PointStatus::domain_error);
    CHECK(beta_rows[1].status == PointStatus::ok);
    CHECK(beta_rows[1].value == Complex(1.25, 0.0));
}

TEST_CASE("lambda - 1 and the functional sum vanish across a sweep") {
    GridSpec g;
    g.exclusions = default_exclusions(Function::lambda_minus_one, g);
    for (const auto& r : sweep(Function::lambda_minus_one, g, {})) {
        if (r.status == PointStatus::ok) CHECK(std::abs(r.value) < 1e-9);
    }
    g.exclusions = default_exclusions(Function::mu_functional, g);
    for (const auto& r : sweep(Function::mu_functional, g, {})) {
        if (r.status == PointStatus::ok) CHECK(std::abs(r.value) < 1e-14);
    }
}

TEST_CASE("sweep output does not depend on the thread count") {
    GridSpec g = parse_grid("-5:5,-5:5,15x15");
    g.exclusions = default_exclusions(Function::lambda, g);
    std::ostringstream serial_csv;
    std::ostringstream parallel_csv;
    std::ostringstream serial_json;
    std::ostringstream parallel_json;
    const auto serial_rows = sweep(Function::lambda, g, {}, Execution::serial());
    const auto parallel_rows = sweep(Function::lambda, g, {}, Execution{4});
    write_sweep_csv(serial_csv, serial_rows);
    write_sweep_csv(parallel_csv, parallel_rows);
    write_sweep_json(serial_json, Function::lambda, g, serial_rows);
    write_sweep_json(parallel_json, Function::lambda, g, parallel_rows);
    CHECK(serial_csv.str() == parallel_csv.str());
    CHECK(serial_json.str() == parallel_json.str());
    CHECK(serial_csv.str().rfind("re_s,im_s,re_value,im_value,terms_used,converged,status\n", 0) == 0);
}

TEST_CASE("function and suite names round-trip") {
    for (const char* name : {"mu", "mu_dirichlet", "mu_direct", "lambda", "beta", "zeta", "alpha"}) {
        CHECK(to_string(parse_function(name)) == name);
    }
    for (const char* name : {"all", "lambda", "beta", "abel_plana", "binomial", "bernoulli", "functional"}) {
        CHECK(to_string(parse_suite(name)) == name);
    }
    CHECK_THROWS_AS(parse_function("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_suite("nope"), std::invalid_argument);
}

TEST_CASE("every suite passes on its default grid") {
    VerifyOptions options;
    for (Suite s : {Suite::lambda, Suite::beta, Suite::abel_plana, Suite::binomial, Suite::bernoulli, Suite::functional}) {
        CAPTURE(to_string(s));
        const auto r = run_verify(s, options);
        CHECK(r.rows.size() > 0);
        CHECK(r.failures.empty());
        CHECK(r.failed() == 0);
    }
}

TEST_CASE("report rows are self-consistent and deterministic") {
    VerifyOptions serial;
    serial.exec = Execution::serial();
    VerifyOptions parallel;
    parallel.exec = Execution{4};
    const auto a = run_verify(Suite::all, serial);
    const auto b = run_verify(Suite::all, parallel);
    std::ostringstream ja;
    std::ostringstream jb;
    write_report(ja, a, serial, "2020-01-01T00:00:00Z");
    write_report(jb, b, parallel, "2020-01-01T00:00:00Z");
    CHECK(ja.str() == jb.str());
    for (const auto& row : a.rows) {
        CHECK(row.rel_error == relative_error(row.lhs, row.rhs));
        CHECK(row.abs_error == std::abs(row.lhs - row.rhs));
    }
}

TEST_CASE("a tighter tolerance than achievable fails rows") {
    VerifyOptions options;
    options.tol = 1e-18;
    options.grid = parse_grid("2:3,-1:1,2x3");
    const auto r = run_verify(Suite::lambda, options);
    CHECK(r.failed() > 0);
}

}  // TEST_SUITE
