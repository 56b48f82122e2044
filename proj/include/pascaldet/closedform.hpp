#ifndef PASCALDET_CLOSEDFORM_HPP
#define PASCALDET_CLOSEDFORM_HPP

#include <optional>

#include "pascaldet/matrix.hpp"
#include "pascaldet/report.hpp"

namespace pascaldet {

enum class TheoremId { T1, T2, T3, T4, T5, T6_prefactored, T6_factorial };

struct TheoremCase {
    TheoremId id;
    long n = 1;
    std::optional<long> a;    // integer specialization for T4/T5
    std::optional<long> X, Y; // required for T6_factorial

    void validate() const;
};

std::string theorem_case_name(TheoremId id);

// The right-hand side of the theorem's determinant evaluation, symbolic
// where the statement is symbolic:
//   T1: (1+x)^C(n-1,2) (x+rho+sigma-rho sigma)^(n-1)
//   T2: (1+x)^(2(n-1)^2) (x+rho)^(2n-2)
//   T3: (1+x)^(2n(n-1))
//   T4: 2^C(n,2)
//   T5: 2^C(n,2) prod_{i<n} (a+2i-1) / n!
//   T6 prefactored: prod_{a<n} (2a+1)!^2 (X+2a+1)(Y+4n-2a-2)
//                   (X-Y-2a)^(2n-2a-2) (X-Y-2a-1)^(2n-2a-2)
//   T6 factorial: the factorial-form product, an exact rational
MPoly rhs(const TheoremCase& c);

// The matrix whose determinant the theorem evaluates.
PolyMatrix theorem_matrix(const TheoremCase& c);

enum class Engine { bareiss, condensation };

std::string engine_name(Engine e);

// Builds the matrix, computes its determinant with the chosen engine and
// compares against rhs() for exact equality.
Report verify_theorem(const TheoremCase& c, Engine engine = Engine::bareiss);

} // namespace pascaldet

#endif
