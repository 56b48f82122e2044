#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pascaldet/mpoly.hpp"
#include "pascaldet/ratfunc.hpp"

using namespace pascaldet;

namespace {

const MPoly X = MPoly::variable(Var::x);
const MPoly RHO = MPoly::variable(Var::rho);
const MPoly SIGMA = MPoly::variable(Var::sigma);
const MPoly A = MPoly::variable(Var::a);
const MPoly BX = MPoly::variable(Var::X);
const MPoly BY = MPoly::variable(Var::Y);
const MPoly T = MPoly::variable(Var::t);

Rational rand_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(num(rng), den(rng));
}

MPoly rand_poly(std::mt19937_64& rng, int max_terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> vard(0, 3); // x, rho, sigma, a
    MPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e{};
        e[static_cast<std::size_t>(vard(rng))] = static_cast<std::uint32_t>(expd(rng));
        e[static_cast<std::size_t>(vard(rng))] = static_cast<std::uint32_t>(expd(rng));
        p += MPoly::monomial(rand_rational(rng), e);
    }
    return p;
}

} // namespace

TEST_CASE("polynomial ring operations on the spec examples") {
    CHECK((X + (-X)).is_zero());
    CHECK((MPoly(1) + X) * (MPoly(1) + X) == MPoly(1) + MPoly(2) * X + X.pow(2));
    CHECK((RHO + SIGMA) * (RHO - SIGMA) == RHO.pow(2) - SIGMA.pow(2));
}

TEST_CASE("exact division") {
    CHECK(exact_div(X.pow(2) - MPoly(1), X - MPoly(1)) == X + MPoly(1));
    CHECK(exact_div(RHO.pow(2) * X + RHO * X.pow(2), RHO) == RHO * X + X.pow(2));
    CHECK_THROWS_AS(exact_div(X + MPoly(1), X - MPoly(1)), NotDivisible);
    CHECK_THROWS_AS(exact_div(X, MPoly()), DivisionByZero);
    // divisor with a larger leading monomial than the dividend
    CHECK_THROWS_AS(exact_div(X + MPoly(1), X.pow(3)), NotDivisible);
}

TEST_CASE("substitution") {
    const MPoly p = BX * BY;
    const MPoly expanded = p.subst({{Var::Y, BX - MPoly(2) * A + T}});
    CHECK(expanded == BX.pow(2) - MPoly(2) * A * BX + T * BX);

    CHECK((X + MPoly(1)).subst({}) == X + MPoly(1));
    CHECK(RHO.pow(2).subst({{Var::rho, MPoly()}}).is_zero());
    CHECK_THROWS_AS(p.subst({{Var::X, A}, {Var::X, T}}), Error);
}

TEST_CASE("degree and valuation") {
    const MPoly p = BX.pow(2) * BY + BX;
    CHECK(p.degree(Var::X) == 2);
    CHECK_FALSE(MPoly().degree(Var::X).has_value());
    CHECK((RHO + SIGMA).degree(Var::x) == 0);
    CHECK((T.pow(2) * X + T.pow(5)).valuation(Var::t) == 2);
    CHECK((X + T).valuation(Var::t) == 0);
}

TEST_CASE("binomial polynomial") {
    CHECK(binom_poly(A, 0) == MPoly(1));
    const MPoly expect = MPoly(make_rational(1, 2)) * A.pow(2) +
                         MPoly(make_rational(3, 2)) * A + MPoly(1);
    CHECK(binom_poly(A + MPoly(2), 2) == expect);
    CHECK(binom_poly(A, -1).is_zero());
}

TEST_CASE("pochhammer polynomial") {
    CHECK(pochhammer_poly(A, 0) == MPoly(1));
    CHECK(pochhammer_poly(BX + MPoly(1), 2) == (BX + MPoly(1)) * (BX + MPoly(2)));
    CHECK(pochhammer_poly(MPoly(-2), 3).is_zero());
}

TEST_CASE("rational function equality is cross-multiplied") {
    CHECK(ratfunc_eq(RatFunc(X.pow(2) - MPoly(1), X - MPoly(1)), RatFunc(X + MPoly(1))));
    CHECK(ratfunc_eq(RatFunc(RHO, X), RatFunc(RHO * X, X.pow(2))));
    CHECK_FALSE(ratfunc_eq(RatFunc(MPoly(1), X), RatFunc(MPoly(1), X + MPoly(1))));
    CHECK_THROWS_AS(RatFunc(X, MPoly()), DivisionByZero);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(0xada11ce5);
    for (int iter = 0; iter < 60; ++iter) {
        const MPoly p = rand_poly(rng), q = rand_poly(rng), r = rand_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("exact division undoes multiplication") {
    std::mt19937_64 rng(0x5eed);
    int done = 0;
    while (done < 60) {
        const MPoly p = rand_poly(rng), q = rand_poly(rng);
        if (q.is_zero())
            continue;
        CHECK(exact_div(p * q, q) == p);
        ++done;
    }
}

TEST_CASE("binom_poly satisfies the Pascal recurrence") {
    std::mt19937_64 rng(0xb1a5);
    for (int iter = 0; iter < 10; ++iter) {
        const MPoly p = rand_poly(rng, 3, 2);
        for (long k = 1; k <= 5; ++k) {
            const MPoly pm1 = p - MPoly(1);
            CHECK(binom_poly(p, k) == binom_poly(pm1, k - 1) + binom_poly(pm1, k));
        }
    }
}

TEST_CASE("pochhammer recurrence") {
    std::mt19937_64 rng(0x9a11);
    for (int iter = 0; iter < 10; ++iter) {
        const MPoly p = rand_poly(rng, 3, 2);
        for (long m = 0; m <= 5; ++m)
            CHECK(pochhammer_poly(p, m + 1) == pochhammer_poly(p, m) * (p + MPoly(m)));
    }
}

TEST_CASE("ratfunc_eq is an equivalence relation on sampled triples") {
    std::mt19937_64 rng(0xec123);
    int done = 0;
    while (done < 40) {
        const MPoly p = rand_poly(rng), q = rand_poly(rng, 3, 2),
                    s1 = rand_poly(rng, 2, 2), s2 = rand_poly(rng, 2, 2);
        if (q.is_zero() || s1.is_zero() || s2.is_zero())
            continue;
        const RatFunc f(p, q);
        const RatFunc g(p * s1, q * s1);
        const RatFunc h(p * s2, q * s2);
        CHECK(ratfunc_eq(f, f));
        CHECK(ratfunc_eq(f, g));
        CHECK(ratfunc_eq(g, f));
        CHECK(ratfunc_eq(g, h));
        CHECK(ratfunc_eq(f, h));
        ++done;
    }
}

TEST_CASE("canonical rendering") {
    CHECK(MPoly().str() == "0");
    CHECK((MPoly(1) + X).pow(4).str() == "x^4 + 4*x^3 + 6*x^2 + 4*x + 1");
    CHECK((X + RHO + SIGMA - RHO * SIGMA).str() == "-rho*sigma + x + rho + sigma");
    CHECK((MPoly(make_rational(1, 2)) * A - MPoly(3)).str() == "1/2*a - 3");
    CHECK((-X).str() == "-x");
}
