#include "pascaldet/recmatrix.hpp"

#include <algorithm>

#include "pascaldet/series2d.hpp"

namespace pascaldet {

namespace {

MPoly var(Var v) { return MPoly::variable(v); }

} // namespace

RecurrenceSpec theorem_recurrence(int theorem) {
    RecurrenceSpec spec;
    spec.horizontal = MPoly(1);
    spec.vertical = MPoly(1);
    spec.diagonal = var(Var::x);
    switch (theorem) {
    case 1:
        spec.row_boundary = [](long i) { return var(Var::rho).pow(i); };
        spec.col_boundary = [](long j) { return var(Var::sigma).pow(j); };
        break;
    case 2:
        spec.row_boundary = [](long i) {
            return i == 0 ? MPoly() : var(Var::rho).pow(i - 1);
        };
        spec.col_boundary = [](long j) {
            return j == 0 ? MPoly() : -var(Var::rho).pow(j - 1);
        };
        break;
    case 3:
        spec.row_boundary = [](long i) { return MPoly(i); };
        spec.col_boundary = [](long j) { return MPoly(-j); };
        break;
    default:
        throw Error("no recurrence boundaries for theorem " + std::to_string(theorem));
    }
    return spec;
}

PolyMatrix build_table(const RecurrenceSpec& spec, long rows, long cols) {
    if (rows < 1 || cols < 1)
        throw Error("table dimensions must be positive");
    MPoly corner;
    if (spec.corner) {
        corner = *spec.corner;
    } else {
        corner = spec.row_boundary(0);
        if (!(corner == spec.col_boundary(0)))
            throw InconsistentCorner();
    }
    PolyMatrix table(rows, cols);
    for (long i = 0; i < rows; ++i) {
        for (long j = 0; j < cols; ++j) {
            if (i == 0 && j == 0)
                table(i, j) = corner;
            else if (j == 0)
                table(i, j) = spec.row_boundary(i);
            else if (i == 0)
                table(i, j) = spec.col_boundary(j);
            else
                table(i, j) = spec.horizontal * table(i - 1, j) +
                              spec.vertical * table(i, j - 1) +
                              spec.diagonal * table(i - 1, j - 1);
        }
    }
    return table;
}

MPoly entry_thm3_closed(long i, long j) {
    if (i < 0 || j < 0)
        throw IndexOutOfRange("entry_thm3_closed expects nonnegative indices");
    const MPoly xp1 = var(Var::x) + MPoly(1);
    MPoly acc;
    const long lmax = std::max(i, j);
    for (long l = 0; l <= lmax; ++l) {
        const Rational weight = rat_binomial(Rational(i), l + 1) * rat_binomial(Rational(j), l) -
                                rat_binomial(Rational(i), l) * rat_binomial(Rational(j), l + 1);
        if (weight != 0)
            acc += MPoly(weight) * xp1.pow(l);
    }
    return acc;
}

PolyMatrix build_binomial_matrix(long n, BinomialFamily family,
                                 std::optional<long> a_value) {
    if (n < 1)
        throw Error("binomial matrix needs n >= 1");
    PolyMatrix m(n, n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const MPoly top = a_value ? MPoly(2 * i + 2 * j + *a_value)
                                      : MPoly(2 * i + 2 * j) + var(Var::a);
            if (family == BinomialFamily::thm4)
                m(i, j) = binom_poly(top, i) - binom_poly(top, i - 1);
            else
                m(i, j) = binom_poly(top, i + 1) - binom_poly(top, i);
        }
    }
    return m;
}

PolyMatrix build_thm6_prefactored(long n) {
    if (n < 1)
        throw Error("theorem-6 matrix needs n >= 1");
    const long dim = 2 * n;
    PolyMatrix m(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            m(i, j) = MPoly(i - j) *
                      pochhammer_poly(var(Var::X) + MPoly(i + 1), j) *
                      pochhammer_poly(var(Var::Y) + MPoly(i + j + 1), dim - j - 1);
    return m;
}

PolyMatrix build_thm6_factorial(long n, long X, long Y) {
    if (n < 1)
        throw Error("theorem-6 matrix needs n >= 1");
    if (X < 0 || Y < 0)
        throw Error("factorial mode requires X, Y >= 0");
    const long dim = 2 * n;
    PolyMatrix m(dim, dim);
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j)
            m(i, j) = MPoly(Rational(i - j) * factorial_ratio(X + i + j, Y + i + j));
    return m;
}

GenFun genfun_cleared(int theorem) {
    const MPoly one(1);
    const MPoly u = var(Var::u), v = var(Var::v), x = var(Var::x);
    const MPoly rho = var(Var::rho), sigma = var(Var::sigma);
    const MPoly core = one - u - v - u * v * x;
    switch (theorem) {
    case 1: {
        const MPoly fu = one - rho * u, fv = one - sigma * v;
        GenFun g;
        g.num = (one - u) * fv + (one - v) * fu - fu * fv;
        g.den = fu * fv * core;
        return g;
    }
    case 2: {
        GenFun g;
        g.num = (one - u - v + rho * u * v) * (u - v);
        g.den = core * (one - rho * u) * (one - rho * v);
        return g;
    }
    case 3: {
        GenFun g;
        g.num = u - v;
        g.den = core * (one - u) * (one - v);
        return g;
    }
    default:
        throw Error("no generating function for theorem " + std::to_string(theorem));
    }
}

bool genfun_check(int theorem, long order) {
    if (order < 1)
        throw Error("genfun_check needs order >= 1");
    const GenFun g = genfun_cleared(theorem);
    const PolyMatrix table = build_table(theorem_recurrence(theorem), order + 1, order + 1);
    const Series2D window = series_from_window(table);
    const Series2D product = series_mul_poly(window, g.den);
    const auto nbuckets = uv_buckets(g.num);
    for (long i = 0; i <= order; ++i) {
        for (long j = 0; j <= order; ++j) {
            MPoly expect;
            if (auto it = nbuckets.find({i, j}); it != nbuckets.end())
                expect = it->second;
            if (!(product.coeff(i, j) == expect))
                return false;
        }
    }
    return true;
}

} // namespace pascaldet
