#ifndef PASCALDET_SERIES2D_HPP
#define PASCALDET_SERIES2D_HPP

#include <map>
#include <utility>

#include "pascaldet/matrix.hpp"

namespace pascaldet {

// Truncated bivariate power series in u, v: every monomial u^i v^j with
// i <= order and j <= order is retained, coefficients are polynomials in the
// remaining variables. Arithmetic never consults anything outside the window.
class Series2D {
public:
    explicit Series2D(long order) : order_(order), coeffs_(order + 1, order + 1) {}

    long order() const { return order_; }

    const MPoly& coeff(long i, long j) const {
        check_window(i, j);
        return coeffs_(i, j);
    }

    MPoly& at(long i, long j) {
        check_window(i, j);
        return coeffs_(i, j);
    }

    friend bool operator==(const Series2D& lhs, const Series2D& rhs) {
        return lhs.order_ == rhs.order_ && lhs.coeffs_ == rhs.coeffs_;
    }

private:
    void check_window(long i, long j) const {
        if (i < 0 || j < 0 || i > order_ || j > order_)
            throw OutOfWindow(i, j, order_);
    }

    long order_;
    PolyMatrix coeffs_;
};

// Views a polynomial as a polynomial in u, v: bucket (k, l) holds the
// coefficient of u^k v^l, itself a polynomial in the remaining variables.
std::map<std::pair<long, long>, MPoly> uv_buckets(const MPoly& p);

// The unique series S with den * S = num modulo truncation. Requires the
// (u,v)-constant term of den to be a nonzero plain Rational.
Series2D series_from_ratfunc(const MPoly& num, const MPoly& den, long order);

inline const MPoly& series_coeff(const Series2D& s, long i, long j) {
    return s.coeff(i, j);
}

// Embeds an (order+1) x (order+1) table of coefficients as a window.
Series2D series_from_window(const PolyMatrix& window);

// Truncated product of a window with a polynomial in u, v.
Series2D series_mul_poly(const Series2D& s, const MPoly& p);

} // namespace pascaldet

#endif
