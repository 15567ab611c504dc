#include "monocont/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "monocont/errors.hpp"

namespace monocont {

namespace {

// Appends B_q for q = table.size() .. last.
void extend(std::vector<ExactRational>& table, long last) {
    if (table.empty()) table.emplace_back(1);
    for (auto q = static_cast<long>(table.size()); q <= last; ++q) {
        ExactRational acc;
        for (long k = 0; k < q; ++k) {
            acc += ExactRational(binomial_exact(static_cast<unsigned long>(q + 1), static_cast<unsigned long>(k)), 1) *
                   table[static_cast<std::size_t>(k)];
        }
        table.push_back(-acc / ExactRational(q + 1));
    }
}

const std::vector<ExactRational>& table() {
    static std::once_flag once;
    static std::vector<ExactRational> values;
    std::call_once(once, [] { extend(values, kBernoulliTableSize - 1); });
    return values;
}

}  // namespace

ExactRational bernoulli_exact(long q) {
    if (q < 0) throw DomainError("bernoulli_exact: q must be >= 0");
    const auto& memo = table();
    if (q < static_cast<long>(memo.size())) return memo[static_cast<std::size_t>(q)];
    std::vector<ExactRational> local = memo;
    extend(local, q);
    return local.back();
}

ExactRational zeta_neg_int(long q) {
    if (q < 0) throw DomainError("zeta_neg_int: q must be >= 0");
    return sign_power(q) * bernoulli_exact(q + 1) / ExactRational(q + 1);
}

ExactRational bernoulli_sum_check(long q) {
    if (q < 1) throw DomainError("bernoulli_sum_check: q must be >= 1");
    ExactRational acc;
    for (long k = 1; k <= q; ++k) {
        acc += ExactRational(binomial_exact(static_cast<unsigned long>(q + 1), static_cast<unsigned long>(k)), 1) *
               bernoulli_exact(k);
    }
    return acc;
}

}  // namespace monocont
