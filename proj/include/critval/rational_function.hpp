/**
 * @brief Unreduced rational functions num/den.
 *
 * No multivariate gcd anywhere: values stay unreduced and equality is
 * cross-multiplication, p/q = r/s iff p*s - r*q = 0 canonically.
 */
#pragma once

#include "critval/polynomial.hpp"

namespace critval {

class RationalFunction {
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::invalid_argument("RationalFunction: zero denominator");
    }
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

private:
    Polynomial num_;
    Polynomial den_;
};

inline bool rf_equal(const RationalFunction& f, const RationalFunction& g) {
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

}  // namespace critval
