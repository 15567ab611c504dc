#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "monocont/config.hpp"
#include "monocont/grid.hpp"
#include "monocont/parallel.hpp"

namespace monocont {

enum class Suite { all, lambda, beta, abel_plana, binomial, bernoulli, functional };

Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

/// Default grid (with its guard disks) for a grid-driven suite; nullopt for
/// the exact suites.
std::optional<GridSpec> default_grid(Suite suite);

struct VerifyOptions {
    EvalConfig cfg;
    /// Replaces the default grid of a single grid-driven suite.
    std::optional<GridSpec> grid;
    /// Replaces every floating-point pass threshold.
    std::optional<double> tol;
    Execution exec;
};

/// A point whose evaluation raised instead of producing a row.
struct PointFailure {
    std::string identity_id;
    Complex point{};
    std::string kind;  ///< "pole", "domain_error" or "nonconvergence"
    std::string message;
};

struct VerifyResult {
    Suite suite = Suite::all;
    std::vector<IdentityReport> rows;
    std::vector<PointFailure> failures;

    long passed() const;
    long failed() const;
    bool all_passed() const { return failed() == 0 && failures.empty(); }
};

/// Runs one suite (or every suite, in enum order, each on its default grid).
/// Rows come out in deterministic order regardless of exec.
VerifyResult run_verify(Suite suite, const VerifyOptions& options);

/// The JSON report {suite, config, started_at, rows, summary}.
void write_report(std::ostream& os, const VerifyResult& result, const VerifyOptions& options,
                  const std::string& started_at);

/// ISO-8601 UTC time taken from SOURCE_DATE_EPOCH when set, otherwise now.
std::string report_timestamp();

}  // namespace monocont
