#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "monocont/config.hpp"

namespace monocont {

/// Polynomial (Neville) extrapolation of f(eps) to eps = 0 along a strictly
/// decreasing sequence in (0, 0.1]. Returns the first extrapolant that differs
/// from its predecessor by less than `tol`; NonConvergence otherwise.
template <class F>
SeriesEvaluation extrapolate_to_zero(std::span<const double> eps, F&& f, double tol, const std::string& what) {
    if (eps.size() < 2) throw DomainError(what + ": need at least two eps values");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!(eps[i] > 0.0 && eps[i] <= 0.1)) throw DomainError(what + ": eps values must lie in (0, 0.1]");
        if (i > 0 && !(eps[i] < eps[i - 1])) throw DomainError(what + ": eps sequence must be strictly decreasing");
    }

    std::vector<Complex> row;
    row.reserve(eps.size());
    Complex previous = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const double e = eps[i];
        row.push_back(f(e));
        // row[j] <- P_{j..i}(0)
        for (std::size_t j = i; j-- > 0;) {
            row[j] = (row[j + 1] * eps[j] - row[j] * e) / (eps[j] - e);
        }
        if (i > 0) {
            const double diff = std::abs(row[0] - previous);
            if (diff < tol) return {row[0], static_cast<long>(i + 1), diff, true, {}};
        }
        previous = row[0];
    }
    throw NonConvergence(what + ": extrapolants did not stabilize");
}

/// eps_k = first / 2^k, k = 0..count-1.
inline std::vector<double> halving_sequence(double first, int count) {
    std::vector<double> out;
    for (int k = 0; k < count; ++k) out.push_back(std::ldexp(first, -k));
    return out;
}

}  // namespace monocont
