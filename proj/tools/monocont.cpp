// Command-line front end: eval, verify, sweep and bernoulli subcommands.
// Exit codes: 0 success, 1 identity failure, 2 usage/domain/pole error,
// 3 non-convergence.

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "monocont/bernoulli.hpp"
#include "monocont/sweep.hpp"
#include "monocont/verify.hpp"

namespace {

using namespace monocont;

constexpr int kExitOk = 0;
constexpr int kExitIdentity = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;
constexpr long kBernoulliMax = 128;

std::string shortest(double x) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string render(Complex z) {
    if (z.imag() == 0.0) return shortest(z.real());
    return shortest(z.real()) + "," + shortest(z.imag());
}

void add_config_flags(CLI::App* cmd, EvalConfig& cfg) {
    cmd->add_option("--max-terms", cfg.max_terms, "Series term budget");
    cmd->add_option("--quad-tol", cfg.quad_tol, "Quadrature tolerance");
    cmd->add_option("--snap-radius", cfg.integer_snap_radius, "Integer snapping radius");
}

/// Writes to `path`, or to stdout when path is empty or "-".
template <class F>
void with_output(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open '" + path + "' for writing");
    write(os);
}

int cmd_eval(const std::string& name, const std::string& s_text, const EvalConfig& cfg) {
    const Function f = parse_function(name);
    const Complex s = parse_complex(s_text);
    const PointValue v = evaluate_point(f, s, cfg);
    if (v.status != PointStatus::ok) {
        std::cerr << "error: " << v.message << '\n';
        return v.status == PointStatus::nonconvergence ? kExitNonConvergence : kExitUsage;
    }
    std::cout << render(v.value);
    if (const auto ref = reference_value(f, s, cfg)) std::cout << " (expected " << *ref << ')';
    std::cout << "\nterms_used: " << v.terms_used << "\ntail_estimate: " << shortest(v.tail_estimate)
              << "\nconverged: " << (v.converged ? "true" : "false") << '\n';
    if (!v.message.empty()) std::cout << "note: " << v.message << '\n';
    return v.converged ? kExitOk : kExitNonConvergence;
}

int cmd_verify(const std::string& suite_name, const std::string& grid_text, VerifyOptions options,
               const std::string& out) {
    const Suite suite = parse_suite(suite_name);
    if (!grid_text.empty()) {
        if (suite == Suite::all || !default_grid(suite)) {
            throw std::invalid_argument("--grid applies to the lambda, abel_plana, binomial and functional suites");
        }
        options.grid = parse_grid(grid_text);
    }
    const VerifyResult result = run_verify(suite, options);
    const std::string stamp = report_timestamp();
    if (!out.empty()) with_output(out, [&](std::ostream& os) { write_report(os, result, options, stamp); });

    std::cout << "suite " << to_string(suite) << ": " << result.passed() << " passed, " << result.failed()
              << " failed, " << result.failures.size() << " errors\n";
    for (const auto& r : result.rows) {
        if (!r.passed) {
            std::cout << "FAIL " << r.identity_id << " at " << render(r.point) << " rel_error=" << shortest(r.rel_error)
                      << '\n';
        }
    }
    bool nonconvergence = false;
    bool domain = false;
    for (const auto& e : result.failures) {
        std::cout << e.kind << ' ' << e.identity_id << " at " << render(e.point) << ": " << e.message << '\n';
        (e.kind == "nonconvergence" ? nonconvergence : domain) = true;
    }
    if (nonconvergence) return kExitNonConvergence;
    if (domain) return kExitUsage;
    return result.failed() == 0 ? kExitOk : kExitIdentity;
}

int cmd_sweep(const std::string& name, const std::string& grid_text, const std::string& format, const EvalConfig& cfg,
              Execution exec, const std::string& out) {
    const Function f = parse_function(name);
    GridSpec grid = grid_text.empty() ? GridSpec{} : parse_grid(grid_text);
    if (grid.exclusions.empty()) grid.exclusions = default_exclusions(f, grid);
    const auto rows = sweep(f, grid, cfg, exec);
    with_output(out, [&](std::ostream& os) {
        if (format == "json") {
            write_sweep_json(os, f, grid, rows);
        } else {
            write_sweep_csv(os, rows);
        }
    });
    return kExitOk;
}

int cmd_bernoulli(long n_max, bool as_float) {
    if (n_max < 0 || n_max > kBernoulliMax) {
        std::cerr << "error: --n-max must lie in [0, " << kBernoulliMax << "]\n";
        return kExitUsage;
    }
    std::cout << "q,B_q,zeta(-q)\n";
    for (long q = 0; q <= n_max; ++q) {
        const ExactRational b = bernoulli_exact(q);
        const ExactRational z = zeta_neg_int(q);
        if (as_float) {
            std::cout << q << ',' << shortest(b.to_double()) << ',' << shortest(z.to_double()) << '\n';
        } else {
            std::cout << q << ',' << b.str() << ',' << z.str() << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic continuation of the integral of x^-s: evaluation and identity checks"};
    app.require_subcommand(1);

    EvalConfig cfg;
    std::optional<double> tol;
    int threads = 0;

    auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    std::string eval_fn;
    std::string eval_s;
    eval->add_option("function", eval_fn, "mu, mu_dirichlet, mu_direct, lambda, beta, zeta, alpha, ...")->required();
    eval->add_option("--s", eval_s, "Point as re,im")->required();
    eval->add_option("--tol", cfg.rel_tol, "Series relative tolerance");
    add_config_flags(eval, cfg);

    auto* verify = app.add_subcommand("verify", "Check the identities of a suite and write a JSON report");
    std::string suite = "all";
    std::string verify_grid;
    std::string verify_out;
    verify->add_option("--suite", suite, "all, lambda, beta, abel_plana, binomial, bernoulli, functional");
    verify->add_option("--grid", verify_grid, "re_min:re_max,im_min:im_max,RxI");
    verify->add_option("--tol", tol, "Pass threshold for every floating-point identity");
    verify->add_option("--out", verify_out, "Report path");
    verify->add_option("--threads", threads, "0 = OpenMP default, 1 = serial reference");
    add_config_flags(verify, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a function over a grid");
    std::string sweep_fn;
    std::string sweep_grid;
    std::string sweep_out;
    std::string format = "csv";
    sweep_cmd->add_option("function", sweep_fn, "Function name")->required();
    sweep_cmd->add_option("--grid", sweep_grid, "re_min:re_max,im_min:im_max,RxI");
    sweep_cmd->add_option("--out", sweep_out, "Output path (stdout when omitted)");
    sweep_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--tol", cfg.rel_tol, "Series relative tolerance");
    sweep_cmd->add_option("--threads", threads, "0 = OpenMP default, 1 = serial reference");
    add_config_flags(sweep_cmd, cfg);

    auto* bern = app.add_subcommand("bernoulli", "Print B_0..B_n with zeta(-q)");
    long n_max = 10;
    bool exact = false;
    bool as_float = false;
    bern->add_option("--n-max", n_max, "Largest index, at most 128");
    auto* exact_flag = bern->add_flag("--exact", exact, "Exact fractions (default)");
    bern->add_flag("--float", as_float, "Decimal values")->excludes(exact_flag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(eval_fn, eval_s, cfg);
        if (*verify) {
            VerifyOptions options{cfg, std::nullopt, tol, Execution{threads}};
            return cmd_verify(suite, verify_grid, options, verify_out);
        }
        if (*sweep_cmd) return cmd_sweep(sweep_fn, sweep_grid, format, cfg, Execution{threads}, sweep_out);
        if (*bern) return cmd_bernoulli(n_max, as_float);
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
