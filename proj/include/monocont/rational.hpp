#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace monocont {

/// Exact rational in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(long num, long den);
    ExactRational(const mpz_class& num, const mpz_class& den);
    explicit ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    double to_double() const { return q_.get_d(); }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.q_)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

private:
    mpq_class q_{0};
};

/// C(n, k) for nonnegative integers, exact.
mpz_class binomial_exact(unsigned long n, unsigned long k);

/// (-1)^n as a rational.
inline ExactRational sign_power(long n) { return (n % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

}  // namespace monocont
