#pragma once

#include "monocont/rational.hpp"

namespace monocont {

/// Size of the memo table filled on first use.
inline constexpr long kBernoulliTableSize = 129;

/// B_q with B_1 = -1/2, from sum_{k=0}^{q} C(q+1, k) B_k = 0. Values up to
/// q = 128 come from a table built once; larger q extend a local copy.
ExactRational bernoulli_exact(long q);

/// zeta(-q) = (-1)^q B_{q+1} / (q+1), exact.
ExactRational zeta_neg_int(long q);

/// sum_{k=1}^{q} C(q+1, k) B_k, which is -1 for every q >= 1.
ExactRational bernoulli_sum_check(long q);

}  // namespace monocont
