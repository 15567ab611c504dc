#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "monocont/config.hpp"
#include "monocont/grid.hpp"
#include "monocont/parallel.hpp"

namespace monocont {

enum class Function {
    mu,
    mu_dirichlet,
    mu_direct,
    lambda,
    lambda_minus_one,
    beta,
    zeta,
    zeta_minus_one,
    alpha,
    mu_functional,  ///< mu(s) + mu(2-s)
};

Function parse_function(const std::string& name);
std::string to_string(Function f);

enum class PointStatus { ok, excluded, pole, domain_error, nonconvergence };
std::string to_string(PointStatus status);

/// One evaluated point. Errors are recorded, never thrown.
struct PointValue {
    Complex s{};
    Complex value{};
    long terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
    PointStatus status = PointStatus::ok;
    std::string message;
};

/// Evaluates one function at one point, catching library errors into the status.
PointValue evaluate_point(Function f, Complex s, const EvalConfig& cfg);

/// Closed-form value at s where one exists (used for reporting only).
std::optional<std::string> reference_value(Function f, Complex s, const EvalConfig& cfg);

/// Guard disks used when a sweep grid carries none: the generic-series
/// guards for the lambda family, the pole disk otherwise.
std::vector<Exclusion> default_exclusions(Function f, const GridSpec& grid);

/// Evaluates every grid point, in grid order. Points inside an exclusion
/// disk are marked `excluded` and not evaluated.
std::vector<PointValue> sweep(Function f, const GridSpec& grid, const EvalConfig& cfg, Execution exec = {});

/// CSV with columns re_s,im_s,re_value,im_value,terms_used,converged,status.
void write_sweep_csv(std::ostream& os, const std::vector<PointValue>& rows);

/// JSON object {function, grid, rows: [...]} with the CSV columns as keys.
void write_sweep_json(std::ostream& os, Function f, const GridSpec& grid, const std::vector<PointValue>& rows);

}  // namespace monocont
