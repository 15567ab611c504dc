#pragma once

#include <optional>
#include <vector>

#include "monocont/config.hpp"
#include "monocont/quadrature.hpp"
#include "monocont/rational.hpp"

namespace monocont {

/// Margin above Re(s) = 1 required by mu_direct.
inline constexpr double kDirectMargin = 0.05;

/// Half-width of the annulus around non-positive integers where lambda's
/// generic path is flagged for near-singular cancellation.
inline constexpr double kLambdaGuardBand = 1e-3;

/// Which route lambda takes.
struct LambdaRouting {
    enum class Mode { generic_series, integer_exact };
    Mode mode = Mode::generic_series;
    std::optional<long> snapped_integer;
};

LambdaRouting lambda_routing(Complex s, const EvalConfig& cfg = {});

/// P_n(s) = (n^(1-s) - (n-1)^(1-s)) / (1-s), the integral of x^(-s) over [n-1, n].
Complex p_n_closed(long n, Complex s, const EvalConfig& cfg = {});

/// P_n(s) from the Newton binomial series
///   (1/(s-1)) sum_{k>=1} (-1)^k C(1-s, k) n^(1-s-k).
SeriesEvaluation p_n_series(long n, Complex s, const EvalConfig& cfg = {});

/// The first `count` terms of p_n_series, in order. Successive ratios tend to 1/n.
std::vector<Complex> p_n_terms(long n, Complex s, long count);

/// sum_{n>=2} P_n(s) for Re(s) > 1 + margin. Partial sums run until the
/// integral bound N^(1-Re s)/(Re s - 1) drops below rel_tol |sum| or
/// max_terms is reached; the remainder integral over [N, inf) is then added
/// in closed form and tail_estimate is the rounding bound of the sum.
SeriesEvaluation mu_direct(Complex s, const EvalConfig& cfg = {}, double margin = kDirectMargin);

/// lambda(s) = sum_{k>=1} (-1)^k C(1-s, k) (zeta(k+s-1) - 1), which equals 1.
/// Routes through lambda_integer_exact at snapped non-positive integers.
SeriesEvaluation lambda(Complex s, const EvalConfig& cfg = {});

/// The generic series alone, for any s off the pole (no integer routing).
/// At an exact non-positive integer m it returns beta(m): the k = 2-m term
/// is the 0 * pole limit that only the exact path accounts for.
SeriesEvaluation lambda_generic(Complex s, const EvalConfig& cfg = {});

/// Term k of lambda's generic series. Exactly 0 whenever the binomial
/// coefficient vanishes, without evaluating zeta.
Complex lambda_term(Complex s, long k, const EvalConfig& cfg = {});

/// beta(m) + (-1)^(-m) alpha(2-m), exactly; always 1.
ExactRational lambda_integer_exact(long m);

/// sum_{k=1}^{1-m} (-1)^k C(1-m, k) (zeta(k+m-1) - 1) with exact zeta values.
ExactRational beta_exact(long m);

/// mu(s) = 1/(s-1).
Complex mu(Complex s, const EvalConfig& cfg = {});

/// mu(s) + mu(2-s) against 0, absolute tolerance.
IdentityReport mu_functional_check(Complex s, const EvalConfig& cfg = {}, double tol = 1e-14);

/// lambda(s) / (s-1): the analytic continuation through zeta.
SeriesEvaluation mu_dirichlet(Complex s, const EvalConfig& cfg = {});

/// sum_{k=2}^{K} (zeta(k) - 1) with K the smallest cutoff whose tail bound
/// 2^(-(K-1)) is below rel_tol.
SeriesEvaluation goldbach_sum(const EvalConfig& cfg = {});

/// sum_{k=2}^{K} (zeta(k) - 1) for a fixed K >= 2; tail_estimate = 2^(-(K-1)).
SeriesEvaluation goldbach_partial(long K, const EvalConfig& cfg = {});

/// sum_{k>=1} C(k+s-2, k) (zeta(k+s-1) - 1) against 1; also requires every
/// term to match lambda's (-1)^k C(1-s, k) term within tol.
IdentityReport apostol_form_check(Complex s, const EvalConfig& cfg = {}, double tol = 1e-9);

/// Continuation value of the integral of x^(-s) over [0, 1]: mu(2-s) = 1/(1-s).
Complex mu_lower_limit_zero(Complex s, const EvalConfig& cfg = {});

/// Direct quadrature of the integral of x^(-s) over (0, 1], Re(s) < 1.
QuadratureResult integral_zero_to_one(Complex s, const EvalConfig& cfg = {});

}  // namespace monocont
