#ifndef PASCALDET_LUWITNESS_HPP
#define PASCALDET_LUWITNESS_HPP

#include <optional>
#include <vector>

#include "pascaldet/matrix.hpp"
#include "pascaldet/report.hpp"

namespace pascaldet {

// Explicit LU-factorization witness: a unit upper-triangular U such that
// M*U is lower triangular with a predicted diagonal (and, for theorem 1,
// a fully predicted L). For theorem 2 the factored matrix is the original
// table with rows reversed and then transposed, m(i,j) = a_{2n-1-j,i}.
struct WitnessSet {
    int theorem = 0;
    long n = 0;
    PolyMatrix m;
    RatFuncMatrix u;
    std::optional<RatFuncMatrix> expected_l; // theorem 1 only
    std::vector<RatFunc> expected_diag;
};

// theorem in {1, 2, 4, 5}; theorem 2 builds a 2n x 2n witness.
WitnessSet build_witness(int theorem, long n);

// Checks M*U against the expectation entrywise (theorem 1) or for lower
// triangularity plus the predicted diagonal, and checks that the diagonal
// product reproduces the theorem's determinant, with the row-reversal sign
// for theorem 2.
Report verify_lu(const WitnessSet& w);

RatFuncMatrix mat_mul(const PolyMatrix& m, const RatFuncMatrix& u);

// The partial-fraction identity the theorem-2 proof leans on, checked as a
// rational-function identity in u, v over coefficients in rho, x.
bool check_partial_fraction();

} // namespace pascaldet

#endif
