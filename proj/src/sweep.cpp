#include "monocont/sweep.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>
#include <utility>

#include "monocont/bernoulli.hpp"
#include "monocont/extrapolate.hpp"
#include "monocont/gamma_binom.hpp"
#include "monocont/mu_series.hpp"
#include "monocont/zeta.hpp"

namespace monocont {

namespace {

constexpr std::array<std::pair<Function, const char*>, 10> kFunctionNames = {{
    {Function::mu, "mu"},
    {Function::mu_dirichlet, "mu_dirichlet"},
    {Function::mu_direct, "mu_direct"},
    {Function::lambda, "lambda"},
    {Function::lambda_minus_one, "lambda_minus_one"},
    {Function::beta, "beta"},
    {Function::zeta, "zeta"},
    {Function::zeta_minus_one, "zeta_minus_one"},
    {Function::alpha, "alpha"},
    {Function::mu_functional, "mu_functional"},
}};

long require_nonpositive_integer(Complex s, const EvalConfig& cfg, const char* what) {
    const auto m = snap_to_integer(s, cfg.integer_snap_radius);
    if (!m || *m > 0) throw DomainError(std::string(what) + " is defined at non-positive integers only");
    return *m;
}

long require_positive_integer(Complex s, const EvalConfig& cfg, const char* what) {
    const auto p = snap_to_integer(s, cfg.integer_snap_radius);
    if (!p || *p < 1) throw DomainError(std::string(what) + " is defined at positive integers only");
    return *p;
}

SeriesEvaluation exact(Complex value, long terms) { return {value, terms, 0.0, true, {}}; }

SeriesEvaluation evaluate(Function f, Complex s, const EvalConfig& cfg) {
    switch (f) {
        case Function::mu: return exact(mu(s, cfg), 1);
        case Function::mu_dirichlet: return mu_dirichlet(s, cfg);
        case Function::mu_direct: return mu_direct(s, cfg);
        case Function::lambda: return lambda(s, cfg);
        case Function::lambda_minus_one: {
            auto out = lambda(s, cfg);
            out.value -= 1.0;
            return out;
        }
        case Function::beta: {
            const long m = require_nonpositive_integer(s, cfg, "beta");
            return exact(beta_exact(m).to_double(), 1 - m);
        }
        case Function::zeta: return zeta(s, cfg);
        case Function::zeta_minus_one: return zeta_minus_one(s, cfg);
        case Function::alpha: {
            const long p = require_positive_integer(s, cfg, "alpha");
            const auto eps = halving_sequence(0.1, 16);
            return alpha_limit(p, eps, cfg);
        }
        case Function::mu_functional: return exact(mu(s, cfg) + mu(2.0 - s, cfg), 2);
    }
    throw std::logic_error("unhandled function");
}

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string shortest(double x) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

// Drops a zero imaginary part.
std::string compact(Complex z) {
    if (z.imag() == 0.0) return shortest(z.real());
    return shortest(z.real()) + "," + shortest(z.imag());
}

}  // namespace

Function parse_function(const std::string& name) {
    for (const auto& [f, n] : kFunctionNames) {
        if (name == n) return f;
    }
    throw std::invalid_argument("unknown function '" + name + "'");
}

std::string to_string(Function f) {
    for (const auto& [g, n] : kFunctionNames) {
        if (f == g) return n;
    }
    return "?";
}

std::string to_string(PointStatus status) {
    switch (status) {
        case PointStatus::ok: return "ok";
        case PointStatus::excluded: return "excluded";
        case PointStatus::pole: return "pole";
        case PointStatus::domain_error: return "domain_error";
        case PointStatus::nonconvergence: return "nonconvergence";
    }
    return "?";
}

PointValue evaluate_point(Function f, Complex s, const EvalConfig& cfg) {
    PointValue out;
    out.s = s;
    try {
        const auto r = evaluate(f, s, cfg);
        out.value = r.value;
        out.terms_used = r.terms_used;
        out.tail_estimate = r.tail_estimate;
        out.converged = r.converged;
        out.message = r.note;
    } catch (const PoleError& e) {
        out.status = PointStatus::pole;
        out.message = e.what();
    } catch (const DomainError& e) {
        out.status = PointStatus::domain_error;
        out.message = e.what();
    } catch (const NonConvergence& e) {
        out.status = PointStatus::nonconvergence;
        out.message = e.what();
    }
    return out;
}

std::optional<std::string> reference_value(Function f, Complex s, const EvalConfig& cfg) {
    const auto m = snap_to_integer(s, cfg.integer_snap_radius);
    switch (f) {
        case Function::mu:
        case Function::mu_dirichlet:
        case Function::mu_direct:
            if (std::abs(s - 1.0) <= cfg.pole_exclusion_radius) return std::nullopt;
            return compact(1.0 / (s - 1.0));
        case Function::lambda: return "1";
        case Function::lambda_minus_one:
        case Function::mu_functional: return "0";
        case Function::beta:
            if (!m || *m > 0) return std::nullopt;
            return (sign_power(-*m) / ExactRational(2 - *m) + ExactRational(1)).str();
        case Function::zeta:
        case Function::zeta_minus_one:
            if (!m || *m > 0) return std::nullopt;
            return (zeta_neg_int(-*m) - (f == Function::zeta ? ExactRational(0) : ExactRational(1))).str();
        case Function::alpha:
            if (!m || *m < 1) return std::nullopt;
            return alpha(*m).str();
    }
    return std::nullopt;
}

std::vector<Exclusion> default_exclusions(Function f, const GridSpec& grid) {
    switch (f) {
        case Function::mu_dirichlet:
        case Function::lambda:
        case Function::lambda_minus_one: return series_exclusions(grid);
        default: return pole_exclusions();
    }
}

std::vector<PointValue> sweep(Function f, const GridSpec& grid, const EvalConfig& cfg, Execution exec) {
    grid.validate();
    std::vector<PointValue> rows(grid.size());
    for_each_index(
        rows.size(),
        [&](std::size_t i) {
            const Complex s = grid.point(i);
            if (grid.excluded(s)) {
                rows[i].s = s;
                rows[i].status = PointStatus::excluded;
                return;
            }
            rows[i] = evaluate_point(f, s, cfg);
        },
        exec);
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<PointValue>& rows) {
    os << "re_s,im_s,re_value,im_value,terms_used,converged,status\n";
    for (const auto& r : rows) {
        const bool has_value = r.status == PointStatus::ok;
        os << number(r.s.real()) << ',' << number(r.s.imag()) << ',' << (has_value ? number(r.value.real()) : "")
           << ',' << (has_value ? number(r.value.imag()) : "") << ',' << r.terms_used << ','
           << (r.converged ? "true" : "false") << ',' << to_string(r.status) << '\n';
    }
}

void write_sweep_json(std::ostream& os, Function f, const GridSpec& grid, const std::vector<PointValue>& rows) {
    nlohmann::ordered_json doc;
    doc["function"] = to_string(f);
    doc["grid"] = format_grid(grid);
    auto& out = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        const bool has_value = r.status == PointStatus::ok;
        nlohmann::ordered_json row;
        row["re_s"] = r.s.real();
        row["im_s"] = r.s.imag();
        row["re_value"] = has_value ? nlohmann::ordered_json(r.value.real()) : nlohmann::ordered_json(nullptr);
        row["im_value"] = has_value ? nlohmann::ordered_json(r.value.imag()) : nlohmann::ordered_json(nullptr);
        row["terms_used"] = r.terms_used;
        row["converged"] = r.converged;
        row["status"] = to_string(r.status);
        out.push_back(std::move(row));
    }
    os << doc.dump(2) << '\n';
}

}  // namespace monocont
