#include "pascaldet/hyper.hpp"

#include <random>

namespace pascaldet {

long termination_index(const PFQSpec& s) {
    bool found = false;
    Rational best;
    for (const auto& p : s.upper) {
        if (is_nonpositive_integer(p) && (!found || p > best)) {
            best = p;
            found = true;
        }
    }
    if (!found)
        throw NonTerminating();
    return to_long(Rational(-best));
}

Rational eval_pfq(const PFQSpec& s) {
    const long n = termination_index(s);
    for (const auto& b : s.lower) {
        // (b)_m = 0 first at m = -b + 1; unsafe iff that happens at m <= n
        if (is_nonpositive_integer(b) && -b <= n - 1)
            throw DenominatorHitsZero();
    }
    Rational sum(1), term(1);
    for (long m = 0; m < n; ++m) {
        for (const auto& a : s.upper)
            term *= a + m;
        for (const auto& b : s.lower)
            term /= b + m;
        term *= s.arg;
        term /= m + 1;
        sum += term;
    }
    return sum;
}

namespace {

Rational summation_rhs(const Rational& a, long n, const Rational& c) {
    const Rational den = rat_pochhammer(c, n);
    if (den == 0)
        throw DenominatorHitsZero();
    return rat_pochhammer(c - a, n) / den;
}

} // namespace

bool check_summation(SummationKind, const Rational& a, long n, const Rational& c) {
    if (n < 0)
        throw Error("summation check needs n >= 0");
    // both kinds verify the terminating instance, where Gauss' summation and
    // Chu-Vandermonde coincide
    const PFQSpec lhs{{a, Rational(-n)}, {c}, Rational(1)};
    return eval_pfq(lhs) == summation_rhs(a, n, c);
}

namespace {

// (b)_m vanishes for some m <= n, i.e. b in {0, -1, ..., -(n-1)}
bool pochhammer_unsafe_through(const Rational& b, long n) {
    return is_nonpositive_integer(b) && -b <= n - 1;
}

} // namespace

bool check_transform_3f2(const Rational& a, const Rational& b, long n,
                        const Rational& d, const Rational& e) {
    if (n < 0)
        throw Error("transformation check needs n >= 0");
    const Rational shifted = d + e - a - b;
    // every lower parameter on either side must stay nonzero through index n,
    // even when another upper parameter terminates a series earlier
    for (const Rational& lower : {d, e, shifted})
        if (pochhammer_unsafe_through(lower, n))
            throw DenominatorHitsZero();
    const Rational lhs = eval_pfq({{a, b, Rational(-n)}, {d, e}, Rational(1)});
    const Rational prefactor = rat_pochhammer(shifted, n) / rat_pochhammer(e, n);
    const Rational rhs_series =
        eval_pfq({{Rational(-n), d - a, d - b}, {d, shifted}, Rational(1)});
    return lhs == prefactor * rhs_series;
}

bool check_contiguous(ContiguousKind kind, const std::vector<Rational>& params,
                      const Rational& z) {
    if (kind == ContiguousKind::f32) {
        if (params.size() != 5)
            throw Error("f32 contiguous relation takes parameters (a,b,c,d,e)");
        const Rational &a = params[0], &b = params[1], &c = params[2];
        const Rational &d = params[3], &e = params[4];
        const Rational lhs = eval_pfq({{a, b, c}, {d, e}, z});
        Rational rhs = eval_pfq({{a - 1, b, c}, {d, e}, z});
        const Rational num = z * b * c;
        if (num != 0) {
            const Rational den = d * e;
            if (den == 0)
                throw DenominatorHitsZero();
            rhs += num / den *
                   eval_pfq({{a, b + 1, c + 1}, {d + 1, e + 1}, z});
        }
        return lhs == rhs;
    }
    if (params.size() != 7)
        throw Error("f43 contiguous relation takes parameters (a,b,c,d,e,f,g)");
    const Rational &a = params[0], &b = params[1], &c = params[2], &d = params[3];
    const Rational &e = params[4], &f = params[5], &g = params[6];
    const Rational lhs = eval_pfq({{a, b, c, d}, {e, f, g}, z});
    Rational rhs = eval_pfq({{a - 1, b, c, d}, {e, f, g}, z});
    const Rational num = z * b * c * d;
    if (num != 0) {
        const Rational den = e * f * g;
        if (den == 0)
            throw DenominatorHitsZero();
        rhs += num / den *
               eval_pfq({{a, b + 1, c + 1, d + 1}, {e + 1, f + 1, g + 1}, z});
    }
    return lhs == rhs;
}

namespace {

Rational draw_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 4);
    return make_rational(num(rng), den(rng));
}

Rational draw_nonzero(std::mt19937_64& rng) {
    for (;;) {
        const Rational r = draw_rational(rng);
        if (r != 0)
            return r;
    }
}

// retries a draw whose parameters violate the identity's preconditions
template <typename F>
bool sample_until_valid(std::mt19937_64& rng, F&& attempt) {
    for (int tries = 0; tries < 1000; ++tries) {
        try {
            return attempt();
        } catch (const DenominatorHitsZero&) {
        } catch (const NonTerminating&) {
        }
        (void)rng();
    }
    throw Error("could not draw admissible hypergeometric parameters");
}

} // namespace

HyperSuiteResult run_hyper_suite(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> nd(0, 6);
    HyperSuiteResult result;
    result.samples = samples;

    for (int k = 0; k < samples; ++k) {
        const bool ok = sample_until_valid(rng, [&] {
            const Rational a = draw_rational(rng);
            const long n = nd(rng);
            const Rational c = draw_rational(rng);
            const bool chu = check_summation(SummationKind::chu_vandermonde, a, n, c);
            const bool gauss = check_summation(SummationKind::gauss_terminating, a, n, c);
            return chu && gauss;
        });
        result.summation_pass += ok ? 1 : 0;
    }

    for (int k = 0; k < samples; ++k) {
        const bool ok = sample_until_valid(rng, [&] {
            return check_transform_3f2(draw_rational(rng), draw_rational(rng), nd(rng),
                                      draw_rational(rng), draw_rational(rng));
        });
        result.transform_pass += ok ? 1 : 0;
    }

    for (int k = 0; k < samples; ++k) {
        const bool ok = sample_until_valid(rng, [&] {
            // c = -n supplies the termination witness for all three series
            const std::vector<Rational> params = {draw_rational(rng), draw_rational(rng),
                                                  Rational(-nd(rng)), draw_nonzero(rng),
                                                  draw_nonzero(rng)};
            return check_contiguous(ContiguousKind::f32, params, draw_rational(rng));
        });
        result.contiguous32_pass += ok ? 1 : 0;
    }

    for (int k = 0; k < samples; ++k) {
        const bool ok = sample_until_valid(rng, [&] {
            const std::vector<Rational> params = {
                draw_rational(rng), draw_rational(rng), draw_rational(rng),
                Rational(-nd(rng)), draw_nonzero(rng), draw_nonzero(rng),
                draw_nonzero(rng)};
            return check_contiguous(ContiguousKind::f43, params, draw_rational(rng));
        });
        result.contiguous43_pass += ok ? 1 : 0;
    }

    return result;
}

} // namespace pascaldet
