#include "monocont/verify.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <json.hpp>
#include <stdexcept>
#include <utility>

#include "monocont/abel_plana.hpp"
#include "monocont/bernoulli.hpp"
#include "monocont/extrapolate.hpp"
#include "monocont/gamma_binom.hpp"
#include "monocont/mu_series.hpp"
#include "monocont/zeta.hpp"

namespace monocont {

namespace {

constexpr std::array<std::pair<Suite, const char*>, 7> kSuiteNames = {{
    {Suite::all, "all"},
    {Suite::lambda, "lambda"},
    {Suite::beta, "beta"},
    {Suite::abel_plana, "abel_plana"},
    {Suite::binomial, "binomial"},
    {Suite::bernoulli, "bernoulli"},
    {Suite::functional, "functional"},
}};

// Default pass thresholds.
constexpr double kLambdaTol = 1e-9;
constexpr double kDirectTol = 1e-10;
constexpr double kGoldbachTol = 1e-11;
constexpr double kFunctionalTol = 1e-14;
constexpr double kQuadratureTol = 1e-9;
constexpr double kAbelTol = 1e-9;
constexpr double kGammaZetaTol = 1e-10;
constexpr double kSinTol = 1e-12;
constexpr double kReflectionTol = 1e-12;
constexpr double kAlphaTol = 1e-8;
constexpr double kBridgeTol = 1e-12;
constexpr std::array<long, 10> kBinomialOrders = {0, 1, 2, 3, 5, 8, 13, 21, 34, 40};

class SuiteRunner {
public:
    SuiteRunner(const VerifyOptions& options, VerifyResult& result) : opt_(options), out_(result) {
        cfg_ = options.cfg;
        if (options.tol) cfg_.rel_tol = std::min(*options.tol, cfg_.rel_tol);
    }

    double tol(double fallback) const { return opt_.tol.value_or(fallback); }
    const EvalConfig& cfg() const { return cfg_; }

    /// Evaluates `rows_at(s)` for every non-excluded grid point, possibly in
    /// parallel, and appends the rows in grid order.
    void over_grid(const GridSpec& grid, const std::string& id,
                   const std::function<std::vector<IdentityReport>(Complex)>& rows_at) {
        grid.validate();
        std::vector<std::vector<IdentityReport>> rows(grid.size());
        std::vector<std::optional<PointFailure>> failures(grid.size());
        for_each_index(
            grid.size(),
            [&](std::size_t i) {
                const Complex s = grid.point(i);
                if (grid.excluded(s)) return;
                guarded(id, s, failures[i], [&] { rows[i] = rows_at(s); });
            },
            opt_.exec);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (auto& r : rows[i]) out_.rows.push_back(std::move(r));
            if (failures[i]) out_.failures.push_back(*failures[i]);
        }
    }

    /// Serial single-row producer.
    void add(const std::string& id, Complex s, const std::function<IdentityReport()>& row) {
        std::optional<PointFailure> failure;
        IdentityReport r;
        guarded(id, s, failure, [&] { r = row(); });
        if (failure) {
            out_.failures.push_back(*failure);
        } else {
            out_.rows.push_back(std::move(r));
        }
    }

    /// Row for an exact identity; passes only on rational equality.
    void add_exact(const std::string& id, Complex s, const ExactRational& lhs, const ExactRational& rhs) {
        IdentityReport r = make_report(id, s, lhs.to_double(), rhs.to_double(), 0.0, 0, Criterion::absolute);
        r.passed = lhs == rhs;
        out_.rows.push_back(std::move(r));
    }

private:
    template <class F>
    static void guarded(const std::string& id, Complex s, std::optional<PointFailure>& failure, F&& f) {
        try {
            f();
        } catch (const PoleError& e) {
            failure = PointFailure{id, s, "pole", e.what()};
        } catch (const DomainError& e) {
            failure = PointFailure{id, s, "domain_error", e.what()};
        } catch (const NonConvergence& e) {
            failure = PointFailure{id, s, "nonconvergence", e.what()};
        }
    }

    const VerifyOptions& opt_;
    VerifyResult& out_;
    EvalConfig cfg_;
};

GridSpec grid_for(Suite suite, const VerifyOptions& options, bool single) {
    if (single && options.grid) {
        GridSpec g = *options.grid;
        if (g.exclusions.empty()) {
            g.exclusions = default_grid(suite)->exclusions;
            // keep the integer guards aligned with the user's range
            if (suite == Suite::lambda) g.exclusions = series_exclusions(g);
        }
        return g;
    }
    return *default_grid(suite);
}

void lambda_suite(SuiteRunner& run, const GridSpec& grid) {
    const auto& cfg = run.cfg();
    run.over_grid(grid, "lambda", [&](Complex s) {
        std::vector<IdentityReport> rows;
        const auto l = lambda(s, cfg);
        rows.push_back(make_report("lambda", s, l.value, 1.0, run.tol(kLambdaTol), l.terms_used));
        const auto md = mu_dirichlet(s, cfg);
        rows.push_back(make_report("mu_dirichlet", s, md.value, 1.0 / (s - 1.0), run.tol(kLambdaTol), md.terms_used));
        rows.push_back(apostol_form_check(s, cfg, run.tol(kLambdaTol)));
        if (s.real() > 1.0 + kDirectMargin) {
            const auto d = mu_direct(s, cfg);
            rows.push_back(make_report("mu_direct", s, d.value, 1.0 / (s - 1.0), run.tol(kDirectTol), d.terms_used));
        }
        return rows;
    });
    for (long m = 0; m >= -20; --m) {
        run.add_exact("lambda_integer_exact", static_cast<double>(m), lambda_integer_exact(m), ExactRational(1));
    }
    run.add("goldbach", 2.0, [&] {
        const auto g = goldbach_sum(cfg);
        return make_report("goldbach", 2.0, g.value, 1.0, run.tol(kGoldbachTol), g.terms_used);
    });
}

void beta_suite(SuiteRunner& run) {
    for (long m = 0; m >= -20; --m) {
        const ExactRational expected = sign_power(-m) / ExactRational(2 - m) + ExactRational(1);
        run.add_exact("beta_exact", static_cast<double>(m), beta_exact(m), expected);
    }
    // C(1-m, k) = ((2-k-m)/(2-m)) C(2-m, 2-k-m) for -m in 0..10, k in 1..1-m
    for (long m = 0; m >= -10; --m) {
        for (long k = 1; k <= 1 - m; ++k) {
            const ExactRational lhs(binomial_exact(static_cast<unsigned long>(1 - m), static_cast<unsigned long>(k)), 1);
            const ExactRational rhs = ExactRational(2 - k - m, 2 - m) *
                ExactRational(binomial_exact(static_cast<unsigned long>(2 - m), static_cast<unsigned long>(2 - k - m)), 1);
            run.add_exact("successive_binomial", Complex(static_cast<double>(m), static_cast<double>(k)), lhs, rhs);
        }
    }
    for (long n = 1; n <= 30; ++n) {
        ExactRational acc;
        for (long j = 0; j <= n; ++j) {
            acc += sign_power(j) * ExactRational(binomial_exact(static_cast<unsigned long>(n), static_cast<unsigned long>(j)), 1);
        }
        run.add_exact("alternating_binomial_sum", static_cast<double>(n), acc, ExactRational(0));
    }
}

void abel_plana_suite(SuiteRunner& run, const GridSpec& grid) {
    const auto& cfg = run.cfg();
    run.over_grid(grid, "abel_plana", [&](Complex s) {
        return std::vector<IdentityReport>{
            abel_plana_zeta_check(s, cfg, run.tol(kAbelTol)),
            gamma_zeta_integral_check(s, cfg, run.tol(kGammaZetaTol)),
            sin_identity_check(s, run.tol(kSinTol)),
        };
    });
}

void binomial_suite(SuiteRunner& run, const GridSpec& grid) {
    const auto& cfg = run.cfg();
    run.over_grid(grid, "binom_reflection", [&](Complex s) {
        std::vector<IdentityReport> rows;
        for (long k : kBinomialOrders) {
            const Complex lhs = (k % 2 == 0 ? 1.0 : -1.0) * binom(1.0 - s, k, cfg.integer_snap_radius);
            const Complex rhs = binom(s + static_cast<double>(k - 2), k, cfg.integer_snap_radius);
            rows.push_back(make_report("binom_reflection", s, lhs, rhs, run.tol(kReflectionTol), k));
        }
        return rows;
    });
    const auto eps = halving_sequence(0.1, 16);
    for (long p = 1; p <= 10; ++p) {
        run.add("alpha_limit", static_cast<double>(p), [&] {
            const auto a = alpha_limit(p, eps, cfg);
            return make_report("alpha_limit", static_cast<double>(p), a.value, alpha(p).to_double(), run.tol(kAlphaTol),
                               a.terms_used);
        });
    }
    std::optional<ResidueCheck> residues;
    run.add("zeta_residue", 1.0, [&] {
        residues = residue_check(eps, cfg, run.tol(kAlphaTol));
        return residues->zeta;
    });
    if (residues) run.add("gamma_residue", 0.0, [&] { return residues->gamma; });
}

void bernoulli_suite(SuiteRunner& run) {
    const auto& cfg = run.cfg();
    for (long q = 2; q <= 50; ++q) {
        ExactRational acc;
        for (long k = 0; k < q; ++k) {
            acc += ExactRational(binomial_exact(static_cast<unsigned long>(q), static_cast<unsigned long>(k)), 1) *
                   bernoulli_exact(k);
        }
        run.add_exact("bernoulli_recurrence", static_cast<double>(q), acc, ExactRational(0));
    }
    for (long q = 1; q <= 30; ++q) {
        run.add_exact("bernoulli_sum", static_cast<double>(q), bernoulli_sum_check(q), ExactRational(-1));
    }
    for (long k = 1; k <= 25; ++k) {
        run.add_exact("odd_bernoulli_zero", static_cast<double>(2 * k + 1), bernoulli_exact(2 * k + 1), ExactRational(0));
    }
    for (long k = 1; k <= 12; ++k) {
        run.add_exact("trivial_zero_exact", static_cast<double>(-2 * k), zeta_neg_int(2 * k), ExactRational(0));
    }
    for (long q = 0; q <= 12; ++q) {
        const Complex s(static_cast<double>(-q), 0.0);
        run.add("zeta_bernoulli_bridge", s, [&] {
            const auto z = zeta(s, cfg);
            return make_report("zeta_bernoulli_bridge", s, z.value, zeta_neg_int(q).to_double(), run.tol(kBridgeTol),
                               z.terms_used, Criterion::absolute);
        });
    }
}

void functional_suite(SuiteRunner& run, const GridSpec& grid) {
    const auto& cfg = run.cfg();
    run.over_grid(grid, "mu_functional", [&](Complex s) {
        std::vector<IdentityReport> rows;
        rows.push_back(mu_functional_check(s, cfg, run.tol(kFunctionalTol)));
        if (s.real() < 1.0) {
            const auto q = integral_zero_to_one(s, cfg);
            rows.push_back(make_report("mu_lower_limit_zero", s, q.value, mu_lower_limit_zero(s, cfg),
                                       run.tol(kQuadratureTol), q.nodes_used));
        }
        return rows;
    });
}

void run_one(Suite suite, SuiteRunner& run, const VerifyOptions& options, bool single) {
    switch (suite) {
        case Suite::lambda: lambda_suite(run, grid_for(suite, options, single)); break;
        case Suite::beta: beta_suite(run); break;
        case Suite::abel_plana: abel_plana_suite(run, grid_for(suite, options, single)); break;
        case Suite::binomial: binomial_suite(run, grid_for(suite, options, single)); break;
        case Suite::bernoulli: bernoulli_suite(run); break;
        case Suite::functional: functional_suite(run, grid_for(suite, options, single)); break;
        case Suite::all: break;
    }
}

nlohmann::ordered_json complex_json(Complex z) {
    nlohmann::ordered_json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

}  // namespace

Suite parse_suite(const std::string& name) {
    for (const auto& [s, n] : kSuiteNames) {
        if (name == n) return s;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string to_string(Suite suite) {
    for (const auto& [s, n] : kSuiteNames) {
        if (s == suite) return n;
    }
    return "?";
}

std::optional<GridSpec> default_grid(Suite suite) {
    GridSpec g;
    switch (suite) {
        case Suite::lambda:
            g = GridSpec{-5.0, 5.0, -5.0, 5.0, 21, 21, {}};
            g.exclusions = series_exclusions(g);
            return g;
        case Suite::functional:
            g = GridSpec{-5.0, 5.0, -5.0, 5.0, 21, 21, pole_exclusions()};
            return g;
        case Suite::abel_plana:
            g = GridSpec{-5.9, -0.1, -5.0, 5.0, 9, 11, {}};
            for (long k = 1; static_cast<double>(-2 * k) >= g.re_min - 1.0; ++k) {
                g.exclusions.push_back({Complex(static_cast<double>(-2 * k), 0.0), kTrivialZeroBand});
            }
            return g;
        case Suite::binomial:
            return GridSpec{-3.0, 3.0, -3.0, 3.0, 7, 7, {}};
        case Suite::all:
        case Suite::beta:
        case Suite::bernoulli:
            return std::nullopt;
    }
    return std::nullopt;
}

long VerifyResult::passed() const {
    long n = 0;
    for (const auto& r : rows) n += r.passed ? 1 : 0;
    return n;
}

long VerifyResult::failed() const { return static_cast<long>(rows.size()) - passed(); }

VerifyResult run_verify(Suite suite, const VerifyOptions& options) {
    options.cfg.validate();
    VerifyResult result;
    result.suite = suite;
    SuiteRunner run(options, result);
    if (suite == Suite::all) {
        for (const auto& [s, name] : kSuiteNames) {
            if (s != Suite::all) run_one(s, run, options, false);
        }
    } else {
        run_one(suite, run, options, true);
    }
    return result;
}

void write_report(std::ostream& os, const VerifyResult& result, const VerifyOptions& options,
                  const std::string& started_at) {
    nlohmann::ordered_json doc;
    doc["suite"] = to_string(result.suite);
    auto& cfg = doc["config"];
    cfg["rel_tol"] = options.cfg.rel_tol;
    cfg["max_terms"] = options.cfg.max_terms;
    cfg["em_cutoff_N"] = options.cfg.em_cutoff_N;
    cfg["em_order_M"] = options.cfg.em_order_M;
    cfg["integer_snap_radius"] = options.cfg.integer_snap_radius;
    cfg["pole_exclusion_radius"] = options.cfg.pole_exclusion_radius;
    cfg["quad_tol"] = options.cfg.quad_tol;
    cfg["quad_tmax_factor"] = options.cfg.quad_tmax_factor;
    cfg["tol"] = options.tol ? nlohmann::ordered_json(*options.tol) : nlohmann::ordered_json(nullptr);
    cfg["grid"] = options.grid && result.suite != Suite::all ? nlohmann::ordered_json(format_grid(*options.grid))
                                                             : nlohmann::ordered_json(nullptr);
    doc["started_at"] = started_at;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
        nlohmann::ordered_json row;
        row["identity_id"] = r.identity_id;
        row["point"] = complex_json(r.point);
        row["lhs"] = complex_json(r.lhs);
        row["rhs"] = complex_json(r.rhs);
        row["abs_error"] = r.abs_error;
        row["rel_error"] = r.rel_error;
        row["passed"] = r.passed;
        row["terms_used"] = r.terms_used;
        rows.push_back(std::move(row));
    }
    auto& summary = doc["summary"];
    summary["total"] = static_cast<long>(result.rows.size());
    summary["passed"] = result.passed();
    summary["failed"] = result.failed();
    auto& failures = summary["errors"] = nlohmann::ordered_json::array();
    for (const auto& f : result.failures) {
        failures.push_back({{"identity_id", f.identity_id}, {"point", complex_json(f.point)}, {"kind", f.kind},
                            {"message", f.message}});
    }
    os << doc.dump(2) << '\n';
}

std::string report_timestamp() {
    std::time_t t = 0;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    }
    std::tm utc{};
    gmtime_r(&t, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

}  // namespace monocont
