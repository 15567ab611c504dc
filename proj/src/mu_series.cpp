#include "monocont/mu_series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "monocont/bernoulli.hpp"
#include "monocont/gamma_binom.hpp"
#include "monocont/series.hpp"
#include "monocont/zeta.hpp"

namespace monocont {

namespace {

// Stieltjes constants gamma_0, gamma_1: zeta(1+d) = 1/d + g0 - g1 d + O(d^2).
constexpr double kStieltjes0 = kEulerGamma;
constexpr double kStieltjes1 = -0.072815845483676724861;

void require_off_pole(Complex s, const EvalConfig& cfg, const char* what) {
    if (std::abs(s - 1.0) <= cfg.pole_exclusion_radius) {
        throw PoleError(std::string(what) + ": pole at s=1");
    }
}

void require_n(long n, const char* what) {
    if (n < 2) throw DomainError(std::string(what) + ": n must be >= 2");
}

// zeta(z) - 1, falling back to the Laurent expansion inside the pole disk
// (only reached by lambda terms whose binomial factor is O(z - 1)).
Complex zeta_minus_one_term(Complex z, const EvalConfig& cfg) {
    const Complex d = z - 1.0;
    if (std::abs(d) <= cfg.pole_exclusion_radius) return 1.0 / d + kStieltjes0 - kStieltjes1 * d - 1.0;
    return zeta_minus_one(z, cfg).value;
}

// Terms before this index may still grow; the stopping rule waits for them.
long lambda_hold(Complex s) {
    return std::max(1L, static_cast<long>(std::ceil(2.0 - s.real()))) + 1;
}

}  // namespace

LambdaRouting lambda_routing(Complex s, const EvalConfig& cfg) {
    if (auto m = snap_to_integer(s, cfg.integer_snap_radius); m && *m <= 0) {
        return {LambdaRouting::Mode::integer_exact, m};
    }
    return {};
}

Complex p_n_closed(long n, Complex s, const EvalConfig& cfg) {
    require_n(n, "p_n_closed");
    require_off_pole(s, cfg, "p_n_closed");
    const Complex a = 1.0 - s;
    const double nd = static_cast<double>(n);
    // n^a - (n-1)^a = (n-1)^a (exp(a ln(n/(n-1))) - 1)
    const Complex lower = real_pow(nd - 1.0, a);
    return checked(lower * expm1(a * std::log1p(1.0 / (nd - 1.0))) / a, "p_n_closed");
}

std::vector<Complex> p_n_terms(long n, Complex s, long count) {
    require_n(n, "p_n_terms");
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
    const double nd = static_cast<double>(n);
    // u_k = (-1)^k C(1-s, k) n^(1-s-k) / (s-1);  u_{k+1} = u_k (k+s-1) / ((k+1) n)
    Complex u = real_pow(nd, -s);
    for (long k = 1; k <= count; ++k) {
        out.push_back(u);
        u *= (s + static_cast<double>(k - 1)) / (static_cast<double>(k + 1) * nd);
    }
    return out;
}

SeriesEvaluation p_n_series(long n, Complex s, const EvalConfig& cfg) {
    require_n(n, "p_n_series");
    require_off_pole(s, cfg, "p_n_series");
    const double nd = static_cast<double>(n);
    SeriesAccumulator acc(cfg.rel_tol, static_cast<long>(std::ceil(std::abs(s))) + 1);
    Complex u = real_pow(nd, -s);
    for (long k = 1; k <= cfg.max_terms; ++k) {
        if (acc.add(u)) return acc.result();
        u *= (s + static_cast<double>(k - 1)) / (static_cast<double>(k + 1) * nd);
    }
    throw NonConvergence("p_n_series: no convergence within max_terms at n=" + std::to_string(n) +
                         ", s=" + format_complex(s));
}

SeriesEvaluation mu_direct(Complex s, const EvalConfig& cfg, double margin) {
    const double sigma = s.real();
    if (!(sigma > 1.0 + margin)) {
        throw DomainError("mu_direct: requires Re(s) > " + std::to_string(1.0 + margin) + " (absolute convergence)");
    }
    SeriesAccumulator acc(cfg.rel_tol);  // used for its compensated sum only
    double magnitude = 0.0;
    long n = 2;
    for (; n <= cfg.max_terms; ++n) {
        const Complex p = p_n_closed(n, s, cfg);
        acc.add(p);
        magnitude += std::abs(p);
        const double bound = std::pow(static_cast<double>(n), 1.0 - sigma) / (sigma - 1.0);
        if (bound < cfg.rel_tol * std::abs(acc.value())) break;
    }
    const long last = std::min(n, cfg.max_terms);
    // Integral of x^(-s) over [N, inf); Re(s) > 1 so it is finite.
    const Complex remainder = real_pow(static_cast<double>(last), 1.0 - s) / (s - 1.0);
    const Complex value = acc.value() + remainder;
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * (magnitude + std::abs(remainder));
    SeriesEvaluation out{value, last - 1, rounding, tail_within(rounding, value, cfg.rel_tol), {}};
    if (!out.converged) throw NonConvergence("mu_direct: rounding bound above tolerance at s=" + format_complex(s));
    return out;
}

Complex lambda_term(Complex s, long k, const EvalConfig& cfg) {
    if (k < 1) throw DomainError("lambda_term: k must be >= 1");
    Complex coeff = s - 1.0;
    for (long j = 1; j < k; ++j) coeff *= (s + static_cast<double>(j - 1)) / static_cast<double>(j + 1);
    if (coeff == 0.0) return 0.0;
    return coeff * zeta_minus_one_term(s + static_cast<double>(k - 1), cfg);
}

SeriesEvaluation lambda_generic(Complex s, const EvalConfig& cfg) {
    require_off_pole(s, cfg, "lambda");
    SeriesAccumulator acc(cfg.rel_tol, lambda_hold(s));
    // (-1)^k C(1-s, k) = C(k+s-2, k); next coefficient multiplies by (k+s-1)/(k+1).
    Complex coeff = s - 1.0;
    for (long k = 1; k <= cfg.max_terms; ++k) {
        const Complex term = coeff == 0.0 ? Complex(0.0) : coeff * zeta_minus_one_term(s + static_cast<double>(k - 1), cfg);
        if (acc.add(checked(term, "lambda"))) {
            SeriesEvaluation out = acc.result();
            const auto near = snap_to_integer(s, kLambdaGuardBand);
            if (near && *near <= 0) out.note = "near-singular term cancellation";
            return out;
        }
        coeff *= (s + static_cast<double>(k - 1)) / static_cast<double>(k + 1);
    }
    throw NonConvergence("lambda: no convergence within max_terms at s=" + format_complex(s));
}

SeriesEvaluation lambda(Complex s, const EvalConfig& cfg) {
    require_off_pole(s, cfg, "lambda");
    const LambdaRouting route = lambda_routing(s, cfg);
    if (route.mode == LambdaRouting::Mode::integer_exact) {
        const long m = *route.snapped_integer;
        return {lambda_integer_exact(m).to_double(), 2 - m, 0.0, true, "integer_exact"};
    }
    return lambda_generic(s, cfg);
}

ExactRational beta_exact(long m) {
    if (m > 0) throw DomainError("beta_exact: m must be <= 0");
    const long top = 1 - m;
    ExactRational acc;
    for (long k = 1; k <= top; ++k) {
        // zeta(k+m-1) with k+m-1 <= 0
        const ExactRational zeta_value = zeta_neg_int(1 - m - k);
        const ExactRational coeff(binomial_exact(static_cast<unsigned long>(top), static_cast<unsigned long>(k)), 1);
        acc += sign_power(k) * coeff * (zeta_value - ExactRational(1));
    }
    return acc;
}

ExactRational lambda_integer_exact(long m) {
    if (m > 0) throw DomainError("lambda_integer_exact: m must be <= 0");
    return beta_exact(m) + sign_power(-m) * alpha(2 - m);
}

Complex mu(Complex s, const EvalConfig& cfg) {
    require_off_pole(s, cfg, "mu");
    return 1.0 / (s - 1.0);
}

IdentityReport mu_functional_check(Complex s, const EvalConfig& cfg, double tol) {
    const Complex sum = mu(s, cfg) + mu(2.0 - s, cfg);
    return make_report("mu_functional", s, sum, 0.0, tol, 2, Criterion::absolute);
}

SeriesEvaluation mu_dirichlet(Complex s, const EvalConfig& cfg) {
    SeriesEvaluation out = lambda(s, cfg);
    const Complex scale = 1.0 / (s - 1.0);
    out.value *= scale;
    out.tail_estimate *= std::abs(scale);
    return out;
}

SeriesEvaluation goldbach_partial(long K, const EvalConfig& cfg) {
    if (K < 2) throw DomainError("goldbach_partial: K must be >= 2");
    SeriesAccumulator acc(cfg.rel_tol);
    for (long k = 2; k <= K; ++k) acc.add(zeta_minus_one(static_cast<double>(k), cfg).value);
    // zeta(k) - 1 <= 2^-k (1 + 2/(k-1)) <= 2^(1-k) for k >= 3, so the tail after K is <= 2^(1-K).
    const double bound = std::ldexp(1.0, static_cast<int>(1 - K));
    return {acc.value(), K - 1, bound, tail_within(bound, acc.value(), cfg.rel_tol), {}};
}

SeriesEvaluation goldbach_sum(const EvalConfig& cfg) {
    long K = 2;
    while (std::ldexp(1.0, static_cast<int>(1 - K)) >= cfg.rel_tol) {
        if (++K > cfg.max_terms) throw NonConvergence("goldbach_sum: tail bound never reaches rel_tol");
    }
    auto out = goldbach_partial(K, cfg);
    if (!out.converged) throw NonConvergence("goldbach_sum: tail bound above tolerance");
    return out;
}

IdentityReport apostol_form_check(Complex s, const EvalConfig& cfg, double tol) {
    require_off_pole(s, cfg, "apostol_form_check");
    if (auto m = snap_to_integer(s, cfg.integer_snap_radius); m && *m <= 0) {
        throw DomainError("apostol_form_check: s=" + std::to_string(*m) + " is a non-positive integer");
    }
    SeriesAccumulator acc(cfg.rel_tol, lambda_hold(s));
    double worst_term = 0.0;
    for (long k = 1; k <= cfg.max_terms; ++k) {
        const Complex apostol = binom(s + static_cast<double>(k - 2), k, cfg.integer_snap_radius);
        const Complex reflected = (k % 2 == 0 ? 1.0 : -1.0) * binom(1.0 - s, k, cfg.integer_snap_radius);
        worst_term = std::max(worst_term, relative_error(apostol, reflected));
        const Complex term = apostol == 0.0 ? Complex(0.0) : apostol * zeta_minus_one(s + static_cast<double>(k - 1), cfg).value;
        if (acc.add(term)) {
            IdentityReport r = make_report("apostol_form", s, acc.value(), 1.0, tol, acc.terms());
            r.passed = r.passed && worst_term <= tol;
            return r;
        }
    }
    throw NonConvergence("apostol_form_check: no convergence within max_terms at s=" + format_complex(s));
}

Complex mu_lower_limit_zero(Complex s, const EvalConfig& cfg) { return mu(2.0 - s, cfg); }

QuadratureResult integral_zero_to_one(Complex s, const EvalConfig& cfg) {
    if (!(s.real() < 1.0)) throw DomainError("integral_zero_to_one: requires Re(s) < 1");
    auto out = tanh_sinh([&](double x) { return real_pow(x, -s); }, 0.0, 1.0, cfg.quad_tol);
    if (!out.converged) throw NonConvergence("integral_zero_to_one: quadrature did not converge");
    return out;
}

}  // namespace monocont
