#ifndef PASCALDET_FACTORID_HPP
#define PASCALDET_FACTORID_HPP

#include "pascaldet/matrix.hpp"
#include "pascaldet/report.hpp"

namespace pascaldet {

// Mechanical verification of the identification-of-factors proof for the
// prefactored theorem-6 determinant T_n(X, Y). All checks operate on the
// prefactored matrix, which is what the proof manipulates.

enum class VanishAxis { X_eq_minus_2a_minus_1, Y_eq_minus_4n_plus_2a_plus_2 };

// det T_n vanishes identically (in the remaining variable) on the
// specialization; certifies the linear factors (X+2a+1) and (Y+4n-2a-2).
bool specialization_vanish(long n, long a, VanishAxis axis);

enum class RowStep { S1, S2, S3, S4 };

// The proof's explicit row relations:
//   S1: rows 2a-i     of T_n(-2a-1, Y), coefficients in W after Y = 2W
//   S2: rows 2n-a-i-1 of T_n(X, -4n+2a+2)
//   S3: rows 2a+v+2-i of T_n(X, X-2a),   0 <= v <= 2n-2a-3
//   S4: rows 2a+v+3-i of T_n(X, X-2a-1), 0 <= v <= 2n-2a-4
// Returns true iff the stated combination is the zero row vector.
// S1 and S2 ignore v.
bool row_relation(long n, long a, RowStep step, long v = 0);

enum class Parity { even, odd };

// t-adic valuation of det T_n after Y = X - 2a + t (even) or
// Y = X - 2a - 1 + t (odd); measures the multiplicity of the factor
// (X - Y - 2a) resp. (X - Y - 2a - 1). The proof needs >= 2n - 2a - 2.
long multiplicity_at_factor(long n, long a, Parity parity);

// Degrees in X and Y of det T_n and of the conjectured product; all four
// must equal 2n^2 - n.
Report degree_bounds(long n);

// At X = -2n the matrix is anti-triangular; the determinant is the signed
// anti-diagonal product and must equal the product side exactly (C = 1).
Report constant_at_X_eq_minus2n(long n);

// The factorial-form matrix of the theorem statement is skew-symmetric.
bool skew_symmetry_check(long n, long X, long Y);

} // namespace pascaldet

#endif
