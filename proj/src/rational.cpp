#include "monocont/rational.hpp"

#include "monocont/errors.hpp"

namespace monocont {

ExactRational::ExactRational(long num, long den) : ExactRational(mpz_class(num), mpz_class(den)) {}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw DomainError("exact division by zero");
    q_ /= o.q_;
    return *this;
}

std::string ExactRational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class binomial_exact(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace monocont
