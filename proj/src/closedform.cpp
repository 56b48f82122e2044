#include "pascaldet/closedform.hpp"

#include "pascaldet/detengine.hpp"
#include "pascaldet/recmatrix.hpp"

namespace pascaldet {

namespace {

long choose2(long n) { return n * (n - 1) / 2; }

MPoly a_or_value(const std::optional<long>& a) {
    return a ? MPoly(*a) : MPoly::variable(Var::a);
}

} // namespace

void TheoremCase::validate() const {
    if (n < 1)
        throw Error("theorem case needs n >= 1");
    if (id == TheoremId::T6_factorial) {
        if (!X || !Y)
            throw Error("T6 factorial mode needs X and Y");
        if (*X < 0 || *Y < 0)
            throw Error("T6 factorial mode needs X, Y >= 0");
    }
}

std::string theorem_case_name(TheoremId id) {
    switch (id) {
    case TheoremId::T1:
        return "T1";
    case TheoremId::T2:
        return "T2";
    case TheoremId::T3:
        return "T3";
    case TheoremId::T4:
        return "T4";
    case TheoremId::T5:
        return "T5";
    case TheoremId::T6_prefactored:
        return "T6pre";
    default:
        return "T6fact";
    }
}

std::string engine_name(Engine e) {
    return e == Engine::bareiss ? "bareiss" : "condensation";
}

MPoly rhs(const TheoremCase& c) {
    c.validate();
    const long n = c.n;
    const MPoly one(1);
    const MPoly xp1 = MPoly::variable(Var::x) + one;
    switch (c.id) {
    case TheoremId::T1: {
        const MPoly core = MPoly::variable(Var::x) + MPoly::variable(Var::rho) +
                           MPoly::variable(Var::sigma) -
                           MPoly::variable(Var::rho) * MPoly::variable(Var::sigma);
        return xp1.pow(choose2(n - 1)) * core.pow(n - 1);
    }
    case TheoremId::T2: {
        const MPoly xr = MPoly::variable(Var::x) + MPoly::variable(Var::rho);
        return xp1.pow(2 * (n - 1) * (n - 1)) * xr.pow(2 * n - 2);
    }
    case TheoremId::T3:
        return xp1.pow(2 * n * (n - 1));
    case TheoremId::T4:
        return MPoly(int_pow(Integer(2), choose2(n)));
    case TheoremId::T5: {
        MPoly prod(1);
        const MPoly a = a_or_value(c.a);
        for (long i = 0; i < n; ++i)
            prod *= a + MPoly(2 * i - 1);
        return MPoly(make_rational(int_pow(Integer(2), choose2(n)), factorial(n))) * prod;
    }
    case TheoremId::T6_prefactored: {
        const MPoly X = MPoly::variable(Var::X), Y = MPoly::variable(Var::Y);
        MPoly prod(1);
        for (long a = 0; a < n; ++a) {
            const Integer oddfac = factorial(2 * a + 1);
            prod *= MPoly(Integer(oddfac * oddfac));
            prod *= X + MPoly(2 * a + 1);
            prod *= Y + MPoly(4 * n - 2 * a - 2);
            prod *= (X - Y - MPoly(2 * a)).pow(2 * n - 2 * a - 2);
            prod *= (X - Y - MPoly(2 * a + 1)).pow(2 * n - 2 * a - 2);
        }
        return prod;
    }
    case TheoremId::T6_factorial: {
        const long X = *c.X, Y = *c.Y;
        Rational value(1);
        for (long i = 0; i < 2 * n; ++i)
            value *= factorial_ratio(X + i, Y + i + 2 * n - 1);
        for (long a = 0; a < n; ++a) {
            const Integer oddfac = factorial(2 * a + 1);
            value *= Rational(Integer(oddfac * oddfac));
            value *= Rational(X + 2 * a + 1);
            value *= Rational(Y + 4 * n - 2 * a - 2);
            value *= rat_pow(Rational(X - Y - 2 * a), 2 * n - 2 * a - 2);
            value *= rat_pow(Rational(X - Y - 2 * a - 1), 2 * n - 2 * a - 2);
        }
        return MPoly(value);
    }
    }
    throw Error("unreachable theorem id");
}

PolyMatrix theorem_matrix(const TheoremCase& c) {
    c.validate();
    switch (c.id) {
    case TheoremId::T1:
        return build_table(theorem_recurrence(1), c.n, c.n);
    case TheoremId::T2:
        return build_table(theorem_recurrence(2), 2 * c.n, 2 * c.n);
    case TheoremId::T3:
        return build_table(theorem_recurrence(3), 2 * c.n, 2 * c.n);
    case TheoremId::T4:
        return build_binomial_matrix(c.n, BinomialFamily::thm4, c.a);
    case TheoremId::T5:
        return build_binomial_matrix(c.n, BinomialFamily::thm5, c.a);
    case TheoremId::T6_prefactored:
        return build_thm6_prefactored(c.n);
    case TheoremId::T6_factorial:
        return build_thm6_factorial(c.n, *c.X, *c.Y);
    }
    throw Error("unreachable theorem id");
}

Report verify_theorem(const TheoremCase& c, Engine engine) {
    c.validate();
    Report report;
    report.case_id = theorem_case_name(c.id);
    report.n = c.n;
    report.engine = engine_name(engine);
    const Stopwatch clock;
    try {
        const PolyMatrix m = theorem_matrix(c);
        const MPoly det =
            engine == Engine::bareiss ? det_bareiss(m) : det_condensation(m);
        const MPoly expect = rhs(c);
        report.lhs = det.str();
        report.rhs = expect.str();
        report.status = det == expect ? Report::Status::pass : Report::Status::fail;
    } catch (const std::exception& e) {
        report.status = Report::Status::error;
        report.lhs = e.what();
    }
    report.millis = clock.millis();
    return report;
}

} // namespace pascaldet
