#include "pascaldet/factorid.hpp"

#include <vector>

#include "pascaldet/closedform.hpp"
#include "pascaldet/detengine.hpp"
#include "pascaldet/ratfunc.hpp"
#include "pascaldet/recmatrix.hpp"

namespace pascaldet {

namespace {

MPoly var(Var v) { return MPoly::variable(v); }

void check_a_range(long n, long a) {
    if (n < 1 || a < 0 || a > n - 1)
        throw Error("factor index a must satisfy 0 <= a <= n-1");
}

long row_index_checked(long row, long dim) {
    if (row < 0 || row >= dim)
        throw IndexOutOfRange("stated row " + std::to_string(row) +
                              " outside 0.." + std::to_string(dim - 1));
    return row;
}

struct RowTerm {
    long row;
    RatFunc coeff;
};

// \sum coeff_i * (row_i of m) must be the zero vector.
bool combination_vanishes(const PolyMatrix& m, const std::vector<RowTerm>& terms) {
    for (long j = 0; j < m.cols(); ++j) {
        RatFunc acc;
        for (const auto& t : terms)
            acc += t.coeff * RatFunc(m(t.row, j));
        if (!acc.is_zero())
            return false;
    }
    return true;
}

} // namespace

bool specialization_vanish(long n, long a, VanishAxis axis) {
    check_a_range(n, a);
    const PolyMatrix base = build_thm6_prefactored(n);
    PolyMatrix specialized(2 * n, 2 * n);
    const std::vector<std::pair<Var, MPoly>> binding =
        axis == VanishAxis::X_eq_minus_2a_minus_1
            ? std::vector<std::pair<Var, MPoly>>{{Var::X, MPoly(-2 * a - 1)}}
            : std::vector<std::pair<Var, MPoly>>{{Var::Y, MPoly(-4 * n + 2 * a + 2)}};
    for (long i = 0; i < 2 * n; ++i)
        for (long j = 0; j < 2 * n; ++j)
            specialized(i, j) = base(i, j).subst(binding);
    return det_bareiss(specialized).is_zero();
}

bool row_relation(long n, long a, RowStep step, long v) {
    check_a_range(n, a);
    const long dim = 2 * n;
    const PolyMatrix base = build_thm6_prefactored(n);
    PolyMatrix m(dim, dim);
    std::vector<RowTerm> terms;

    const auto specialize = [&](const std::vector<std::pair<Var, MPoly>>& binding) {
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j)
                m(i, j) = base(i, j).subst(binding);
    };

    switch (step) {
    case RowStep::S1: {
        // X = -2a-1, then Y = 2W so the half-integer Pochhammer
        // (Y/2 + 2a - i)_i becomes polynomial in W
        specialize({{Var::X, MPoly(-2 * a - 1)}, {Var::Y, MPoly(2) * var(Var::W)}});
        const MPoly W = var(Var::W);
        for (long i = 0; i <= a; ++i) {
            RowTerm t;
            t.row = row_index_checked(2 * a - i, dim);
            const MPoly num = pochhammer_poly(MPoly(2) * W + MPoly(2 * n + 2 * a - i), i);
            const MPoly den = pochhammer_poly(W + MPoly(2 * a - i), i);
            const Rational w = rat_binomial(Rational(a), i) * (i % 2 ? -1 : 1);
            t.coeff = RatFunc(MPoly(w) * num, den);
            terms.push_back(std::move(t));
        }
        break;
    }
    case RowStep::S2: {
        specialize({{Var::Y, MPoly(-4 * n + 2 * a + 2)}});
        const MPoly X = var(Var::X);
        const MPoly half_x = MPoly(make_rational(1, 2)) * X;
        for (long i = 0; i <= a; ++i) {
            RowTerm t;
            t.row = row_index_checked(2 * n - a - i - 1, dim);
            const MPoly num = pochhammer_poly(
                half_x + MPoly(2 * n - a - i) + MPoly(make_rational(1, 2)), i);
            const MPoly den = pochhammer_poly(X + MPoly(2 * n - a - i), i);
            const Rational w = rat_binomial(Rational(a), i) * (i % 2 ? -1 : 1);
            t.coeff = RatFunc(MPoly(w) * num, den);
            terms.push_back(std::move(t));
        }
        break;
    }
    case RowStep::S3:
    case RowStep::S4: {
        const bool odd = step == RowStep::S4;
        const long shift = odd ? 2 * a + 1 : 2 * a; // Y = X - shift
        const long top = odd ? 2 * a + 3 : 2 * a + 2;
        specialize({{Var::Y, var(Var::X) - MPoly(shift)}});
        const MPoly X = var(Var::X);
        for (long i = 0; i <= top; ++i) {
            RowTerm t;
            t.row = row_index_checked(shift + v + 2 - i, dim);
            const MPoly num = pochhammer_poly(X + MPoly(2 * n + v - i + 2), i);
            const MPoly den = pochhammer_poly(X + MPoly(shift + v - i + 3), i);
            const Rational w = rat_binomial(Rational(top), i) * (i % 2 ? -1 : 1);
            t.coeff = RatFunc(MPoly(w) * num, den);
            terms.push_back(std::move(t));
        }
        break;
    }
    }
    return combination_vanishes(m, terms);
}

long multiplicity_at_factor(long n, long a, Parity parity) {
    check_a_range(n, a);
    const PolyMatrix base = build_thm6_prefactored(n);
    const long shift = parity == Parity::even ? 2 * a : 2 * a + 1;
    const MPoly image = var(Var::X) - MPoly(shift) + var(Var::t);
    PolyMatrix m(2 * n, 2 * n);
    for (long i = 0; i < 2 * n; ++i)
        for (long j = 0; j < 2 * n; ++j)
            m(i, j) = base(i, j).subst({{Var::Y, image}});
    const MPoly det = det_bareiss(m);
    const auto val = det.valuation(Var::t);
    if (!val)
        throw Error("determinant vanished identically; no valuation to read");
    return *val;
}

Report degree_bounds(long n) {
    Report report;
    report.case_id = "T6-degrees";
    report.n = n;
    report.engine = "bareiss";
    const Stopwatch clock;
    const MPoly det = det_bareiss(build_thm6_prefactored(n));
    const MPoly product = rhs(TheoremCase{TheoremId::T6_prefactored, n, {}, {}, {}});
    const long expected = 2 * n * n - n;
    const auto fmt = [](std::optional<long> d) {
        return d ? std::to_string(*d) : std::string("-inf");
    };
    report.lhs = fmt(det.degree(Var::X)) + "," + fmt(det.degree(Var::Y)) + "," +
                 fmt(product.degree(Var::X)) + "," + fmt(product.degree(Var::Y));
    report.rhs = std::to_string(expected) + "," + std::to_string(expected) + "," +
                 std::to_string(expected) + "," + std::to_string(expected);
    report.status =
        report.lhs == report.rhs ? Report::Status::pass : Report::Status::fail;
    report.millis = clock.millis();
    return report;
}

Report constant_at_X_eq_minus2n(long n) {
    Report report;
    report.case_id = "T6-constant";
    report.n = n;
    report.engine = "exact";
    const Stopwatch clock;
    const long dim = 2 * n;
    const PolyMatrix base = build_thm6_prefactored(n);
    PolyMatrix m(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            m(i, j) = base(i, j).subst({{Var::X, MPoly(-2 * n)}});

    // (-2n+1+i)_j vanishes exactly when i+j >= 2n (and i < 2n), so the
    // specialized matrix must be anti-triangular
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
            if (i + j >= dim && !m(i, j).is_zero()) {
                report.lhs = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") nonzero under X = -2n";
                report.rhs = "anti-triangular";
                report.status = Report::Status::fail;
                report.millis = clock.millis();
                return report;
            }
        }
    }

    MPoly det(((n * (2 * n - 1)) % 2 == 0) ? 1 : -1);
    for (long i = 0; i < dim; ++i)
        det *= m(i, dim - 1 - i);
    const MPoly expect = rhs(TheoremCase{TheoremId::T6_prefactored, n, {}, {}, {}})
                             .subst({{Var::X, MPoly(-2 * n)}});
    report.lhs = det.str();
    report.rhs = expect.str();
    report.status = det == expect ? Report::Status::pass : Report::Status::fail;
    report.millis = clock.millis();
    return report;
}

bool skew_symmetry_check(long n, long X, long Y) {
    const PolyMatrix m = build_thm6_factorial(n, X, Y);
    for (long i = 0; i < 2 * n; ++i)
        for (long j = 0; j < 2 * n; ++j)
            if (!(m(i, j) == -m(j, i)))
                return false;
    return true;
}

} // namespace pascaldet
