#ifndef PASCALDET_RATIONAL_HPP
#define PASCALDET_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "pascaldet/errors.hpp"

namespace pascaldet {

// Exact coefficient arithmetic. mpq_class keeps values canonical (reduced,
// positive denominator) as long as every entry point canonicalizes, which
// make_rational enforces.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_nonpositive_integer(const Rational& q) {
    return is_integer(q) && q <= 0;
}

// Exact conversion for values known to be small (indices, exponents).
inline long to_long(const Integer& z) {
    if (!z.fits_slong_p())
        throw Error("integer too large for an index: " + z.get_str());
    return z.get_si();
}

inline long to_long(const Rational& q) {
    if (!is_integer(q))
        throw Error("rational is not an integer: " + q.get_str());
    return to_long(Integer(q.get_num()));
}

inline Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer int_pow(const Integer& base, long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0)
        return Rational(1);
    if (base == 0 && exp > 0)
        return Rational(0);
    Rational r(int_pow(Integer(base.get_num()), exp), int_pow(Integer(base.get_den()), exp));
    // powers of a canonical rational are canonical already
    return r;
}

// Rising factorial (alpha)_m = alpha (alpha+1) ... (alpha+m-1), (alpha)_0 = 1.
inline Rational rat_pochhammer(const Rational& alpha, long m) {
    Rational r(1);
    for (long k = 0; k < m; ++k)
        r *= alpha + k;
    return r;
}

// Generalized binomial: product (top)(top-1)...(top-k+1)/k!, zero for k < 0.
inline Rational rat_binomial(const Rational& top, long k) {
    if (k < 0)
        return Rational(0);
    Rational r(1);
    for (long t = 0; t < k; ++t)
        r *= top - t;
    return r / Rational(factorial(k));
}

// p!/q! for p, q >= 0, computed as a rising-factorial ratio so the magnitude
// stays proportional to the quotient.
inline Rational factorial_ratio(long p, long q) {
    if (p >= q)
        return Rational(rat_pochhammer(Rational(q + 1), p - q));
    return Rational(1) / rat_pochhammer(Rational(p + 1), q - p);
}

} // namespace pascaldet

#endif
