/**
 * @brief Exact rational scalar backed by GMP.
 *
 * Every coefficient in the library is an ExactRational: an arbitrary
 * precision fraction kept in canonical form (positive denominator,
 * gcd(|num|, den) = 1, zero stored as 0/1).
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace critval {

using BigInt = mpz_class;

class ExactRational {
public:
    ExactRational() : v_(0) {}
    ExactRational(long n) : v_(static_cast<signed long>(n)) {}
    ExactRational(const BigInt& n) : v_(n) {}
    ExactRational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
        v_.canonicalize();
    }
    ExactRational(long num, long den) : ExactRational(BigInt(num), BigInt(den)) {}
    explicit ExactRational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const BigInt numerator() const { return v_.get_num(); }
    const BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    ExactRational operator-() const { return ExactRational(mpq_class(-v_)); }
    ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
    ExactRational& operator/=(const ExactRational& o) {
        if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.v_ < b.v_; }

    ExactRational pow(unsigned e) const {
        mpq_class r(1);
        mpq_class base = v_;
        for (unsigned k = e; k > 0; k >>= 1) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
        }
        return ExactRational(std::move(r));
    }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;  // kept canonical
};

inline BigInt factorial(unsigned k) {
    BigInt r(1);
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace critval
