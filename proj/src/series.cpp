#include "monocont/series.hpp"

#include <algorithm>
#include <cmath>

namespace monocont {

void SeriesAccumulator::Neumaier::add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
        carry += (sum - t) + x;
    } else {
        carry += (x - t) + sum;
    }
    sum = t;
}

bool SeriesAccumulator::add(Complex term) {
    re_.add(term.real());
    im_.add(term.imag());
    ++count_;

    const double mag = std::abs(term);
    const double previous = recent_[2];
    recent_[0] = recent_[1];
    recent_[1] = recent_[2];
    recent_[2] = mag;

    const Complex partial = value();
    small_run_ = mag < tol_ * std::max(std::abs(partial), 1e-30) ? small_run_ + 1 : 0;
    if (count_ < hold_until_ || small_run_ < 3) return false;

    double tail = recent_[0] + recent_[1] + recent_[2];
    if (previous > 0.0) {
        const double ratio = mag / previous;
        if (ratio < 1.0) {
            tail += mag * ratio / (1.0 - ratio);
        } else {
            return false;
        }
    }
    tail_ = tail;
    converged_ = tail_within(tail_, partial, tol_);
    return converged_;
}

}  // namespace monocont
