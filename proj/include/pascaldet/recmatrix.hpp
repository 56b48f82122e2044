#ifndef PASCALDET_RECMATRIX_HPP
#define PASCALDET_RECMATRIX_HPP

#include <functional>
#include <optional>

#include "pascaldet/matrix.hpp"

namespace pascaldet {

// Bivariate recurrence a_{i,j} = h*a_{i-1,j} + v*a_{i,j-1} + d*a_{i-1,j-1}
// with boundary generators for the first column (a_{i,0}) and first row
// (a_{0,j}). The paper's three cases fix (h, v, d) = (1, 1, x).
struct RecurrenceSpec {
    MPoly horizontal;
    MPoly vertical;
    MPoly diagonal;
    std::function<MPoly(long)> row_boundary; // a_{i,0}
    std::function<MPoly(long)> col_boundary; // a_{0,j}
    std::optional<MPoly> corner;             // a_{0,0} override
};

// Boundary triples for the three recurrence theorems:
//   1: a_{i,0} = rho^i,            a_{0,j} = sigma^j
//   2: a_{0,0} = 0, a_{i,0} = rho^{i-1}, a_{0,j} = -rho^{j-1}
//   3: a_{i,0} = i,                a_{0,j} = -j
RecurrenceSpec theorem_recurrence(int theorem);

PolyMatrix build_table(const RecurrenceSpec& spec, long rows, long cols);

// Closed form for the theorem-3 table entries:
// sum over l of (C(i,l+1) C(j,l) - C(i,l) C(j,l+1)) (x+1)^l.
MPoly entry_thm3_closed(long i, long j);

enum class BinomialFamily { thm4, thm5 };

// n x n matrix with entries C(2i+2j+a, i) - C(2i+2j+a, i-1) (thm4) or
// C(2i+2j+a, i+1) - C(2i+2j+a, i) (thm5); a symbolic unless a_value given.
PolyMatrix build_binomial_matrix(long n, BinomialFamily family,
                                 std::optional<long> a_value = std::nullopt);

// 2n x 2n matrix with entries (i-j) (X+i+1)_j (Y+i+j+1)_{2n-j-1}, symbolic
// in X and Y.
PolyMatrix build_thm6_prefactored(long n);

// 2n x 2n matrix with entries (i-j) (X+i+j)!/(Y+i+j)! as exact rationals;
// the factorial ratios are computed as rising-factorial products.
PolyMatrix build_thm6_factorial(long n, long X, long Y);

// Verifies den * (table window) = num within the window, where (num, den)
// are the theorem's generating-function numerator and denominator after
// clearing the boundary factors.
bool genfun_check(int theorem, long order);

// The cleared numerator/denominator pair used by genfun_check.
struct GenFun {
    MPoly num;
    MPoly den;
};
GenFun genfun_cleared(int theorem);

} // namespace pascaldet

#endif
