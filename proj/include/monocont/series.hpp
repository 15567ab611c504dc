#pragma once

#include "monocont/config.hpp"

namespace monocont {

/// Compensated partial sums with the shared stopping rule: stop after three
/// consecutive terms with |term| < rel_tol * max(|partial|, 1e-30), once the
/// tail estimate (those three magnitudes plus a geometric extrapolation at
/// the last observed ratio) is itself within rel_tol of the partial sum.
class SeriesAccumulator {
public:
    /// The rule is not tested before term number `hold_until` (1-based).
    explicit SeriesAccumulator(double rel_tol, long hold_until = 1) : tol_(rel_tol), hold_until_(hold_until) {}

    /// Adds a term and returns true once the series is converged.
    bool add(Complex term);

    Complex value() const { return {re_.sum + re_.carry, im_.sum + im_.carry}; }
    long terms() const { return count_; }
    double tail_estimate() const { return tail_; }
    bool converged() const { return converged_; }

    /// SeriesEvaluation snapshot of the current state.
    SeriesEvaluation result() const { return {value(), count_, tail_, converged_, {}}; }

private:
    struct Neumaier {
        double sum = 0.0;
        double carry = 0.0;
        void add(double x);
    };

    double tol_;
    long hold_until_;
    Neumaier re_, im_;
    long count_ = 0;
    int small_run_ = 0;
    double recent_[3] = {0.0, 0.0, 0.0};
    double tail_ = 0.0;
    bool converged_ = false;
};

}  // namespace monocont
