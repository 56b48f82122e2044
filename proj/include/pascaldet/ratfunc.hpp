#ifndef PASCALDET_RATFUNC_HPP
#define PASCALDET_RATFUNC_HPP

#include <string>

#include "pascaldet/mpoly.hpp"

namespace pascaldet {

// Quotient of two polynomials. No gcd normalization is ever performed;
// equality is by cross-multiplication, which keeps every check exact
// without needing multivariate gcd.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(MPoly numerator) : num_(std::move(numerator)), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(MPoly numerator, MPoly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero())
            throw DivisionByZero("rational function with zero denominator");
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(const RatFunc& lhs, const RatFunc& rhs) {
        if (lhs.den_ == rhs.den_)
            return RatFunc(lhs.num_ + rhs.num_, lhs.den_);
        return RatFunc(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
    }
    friend RatFunc operator-(const RatFunc& lhs, const RatFunc& rhs) {
        if (lhs.den_ == rhs.den_)
            return RatFunc(lhs.num_ - rhs.num_, lhs.den_);
        return RatFunc(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
    }
    friend RatFunc operator*(const RatFunc& lhs, const RatFunc& rhs) {
        return RatFunc(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

private:
    MPoly num_, den_;
};

// p/q == r/s iff p*s == r*q as polynomials.
inline bool ratfunc_eq(const RatFunc& f, const RatFunc& g) {
    return f.num() * g.den() == g.num() * f.den();
}

inline RatFunc ratfunc_div(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero())
        throw DivisionByZero("rational function division by zero");
    return RatFunc(f.num() * g.den(), f.den() * g.num());
}

} // namespace pascaldet

#endif
