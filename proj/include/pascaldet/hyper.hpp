#ifndef PASCALDET_HYPER_HPP
#define PASCALDET_HYPER_HPP

#include <cstdint>
#include <vector>

#include "pascaldet/rational.hpp"

namespace pascaldet {

// A terminating hypergeometric series: at least one upper parameter must be
// a nonpositive integer, and no lower parameter may zero a denominator at or
// before the termination index.
struct PFQSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational arg;
};

// Termination index: -(largest nonpositive-integer upper parameter).
// Throws NonTerminating when there is none.
long termination_index(const PFQSpec& s);

// Exact finite sum up to the termination index. Lower-parameter safety is
// checked eagerly: a lower Pochhammer vanishing at index <= the termination
// index raises DenominatorHitsZero rather than being skipped.
Rational eval_pfq(const PFQSpec& s);

enum class SummationKind { gauss_terminating, chu_vandermonde };

// 2F1[a, -n; c; 1] = (c-a)_n / (c)_n. Gauss' summation is verified in its
// terminating instances only, where it coincides with Chu-Vandermonde.
bool check_summation(SummationKind kind, const Rational& a, long n, const Rational& c);

// 3F2[a, b, -n; d, e; 1] =
//   ((-a-b+d+e)_n / (e)_n) 3F2[-n, -a+d, -b+d; d, -a-b+d+e; 1]
bool check_transform_3f2(const Rational& a, const Rational& b, long n,
                        const Rational& d, const Rational& e);

enum class ContiguousKind { f32, f43 };

// f32, params (a,b,c,d,e):
//   3F2[a,b,c; d,e; z] = 3F2[a-1,b,c; d,e; z]
//                        + z (bc/de) 3F2[a,b+1,c+1; d+1,e+1; z]
// f43, params (a,b,c,d,e,f,g): the analogous relation with bcd/efg.
bool check_contiguous(ContiguousKind kind, const std::vector<Rational>& params,
                      const Rational& z);

struct HyperSuiteResult {
    int samples = 0;
    int summation_pass = 0;
    int transform_pass = 0;
    int contiguous32_pass = 0;
    int contiguous43_pass = 0;
    bool all_pass() const {
        return summation_pass == samples && transform_pass == samples &&
               contiguous32_pass == samples && contiguous43_pass == samples;
    }
};

// Seeded randomized verification of all four identity families. Parameter
// draws that violate an identity's preconditions are redrawn; only a check
// returning false counts as a failure.
HyperSuiteResult run_hyper_suite(int samples, std::uint64_t seed);

} // namespace pascaldet

#endif
