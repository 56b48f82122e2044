#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pascaldet/luwitness.hpp"

using namespace pascaldet;

namespace {

const MPoly ONE(1);
const MPoly X = MPoly::variable(Var::x);
const MPoly RHO = MPoly::variable(Var::rho);
const MPoly SIGMA = MPoly::variable(Var::sigma);
const MPoly A = MPoly::variable(Var::a);

} // namespace

TEST_CASE("theorem-1 witness, n=2") {
    const WitnessSet w = build_witness(1, 2);
    CHECK(ratfunc_eq(w.u(0, 1), RatFunc(-SIGMA)));
    CHECK(ratfunc_eq(w.u(0, 0), RatFunc(ONE)));
    REQUIRE(w.expected_l.has_value());
    CHECK(ratfunc_eq((*w.expected_l)(0, 0), RatFunc(ONE)));
    CHECK((*w.expected_l)(0, 1).is_zero());
    CHECK(ratfunc_eq((*w.expected_l)(1, 0), RatFunc(RHO)));
    CHECK(ratfunc_eq((*w.expected_l)(1, 1), RatFunc(X + RHO + SIGMA - RHO * SIGMA)));
    CHECK(verify_lu(w).passed());
}

TEST_CASE("theorem-4 witness, n=2") {
    const WitnessSet w = build_witness(4, 2);
    CHECK(ratfunc_eq(w.u(0, 1), RatFunc(MPoly(-1))));
    // the witness matrix is symbolic in a; at a=0 it is [[1,1],[1,3]]
    CHECK(w.m(0, 0).subst({{Var::a, MPoly()}}) == ONE);
    CHECK(w.m(1, 1).subst({{Var::a, MPoly()}}) == MPoly(3));
    CHECK(ratfunc_eq(w.expected_diag[0], RatFunc(ONE)));
    CHECK(ratfunc_eq(w.expected_diag[1], RatFunc(MPoly(2))));
    CHECK(verify_lu(w).passed());
}

TEST_CASE("theorem-5 witness diagonal") {
    const WitnessSet w = build_witness(5, 2);
    CHECK(ratfunc_eq(w.expected_diag[0], RatFunc(A - ONE)));
    CHECK(ratfunc_eq(w.expected_diag[1], RatFunc(A + ONE)));
    CHECK(verify_lu(w).passed());
}

TEST_CASE("theorem-2 witness, n=1") {
    const WitnessSet w = build_witness(2, 1);
    CHECK(w.m(0, 0) == ONE);
    CHECK(w.m(0, 1).is_zero());
    CHECK(w.m(1, 0).is_zero());
    CHECK(w.m(1, 1) == MPoly(-1));
    CHECK(w.u(0, 1).is_zero());
    CHECK(ratfunc_eq(w.u(0, 0), RatFunc(ONE)));
    CHECK(ratfunc_eq(w.expected_diag[0], RatFunc(ONE)));
    CHECK(ratfunc_eq(w.expected_diag[1], RatFunc(MPoly(-1))));
    CHECK(verify_lu(w).passed());
}

TEST_CASE("theorem-2 witness, n=2 diagonal list") {
    const WitnessSet w = build_witness(2, 2);
    const MPoly xp1 = ONE + X;
    CHECK(ratfunc_eq(w.expected_diag[0], RatFunc(RHO.pow(2))));
    CHECK(ratfunc_eq(w.expected_diag[1], RatFunc(-(RHO + X), RHO)));
    CHECK(ratfunc_eq(w.expected_diag[2], RatFunc((RHO + X) * xp1, RHO)));
    CHECK(ratfunc_eq(w.expected_diag[3], RatFunc(-xp1)));
    CHECK(verify_lu(w).passed());
}

TEST_CASE("witnesses verify across the unit-test ranges") {
    for (long n = 1; n <= 4; ++n)
        CHECK(verify_lu(build_witness(1, n)).passed());
    for (long n = 1; n <= 5; ++n)
        CHECK(verify_lu(build_witness(4, n)).passed());
    for (long n = 1; n <= 4; ++n)
        CHECK(verify_lu(build_witness(5, n)).passed());
    for (long n = 1; n <= 3; ++n)
        CHECK(verify_lu(build_witness(2, n)).passed());
}

TEST_CASE("theorem-2 last column starts with a zero entry") {
    for (long n = 1; n <= 5; ++n) {
        const WitnessSet w = build_witness(2, n);
        CHECK(w.u(0, 2 * n - 1).is_zero());
    }
}

TEST_CASE("partial fraction expansion behind the theorem-2 witness") {
    CHECK(check_partial_fraction());
}

TEST_CASE("witness construction rejects bad input") {
    CHECK_THROWS_AS(build_witness(3, 2), Error);
    CHECK_THROWS_AS(build_witness(1, 0), Error);
}
