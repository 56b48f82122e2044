#include "pascaldet/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace pascaldet {

namespace {
constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "x", "rho", "sigma", "a", "X", "Y", "u", "v", "t", "W"};
}

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name)
            return static_cast<Var>(i);
    return std::nullopt;
}

void MPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
    MPoly r;
    for (const auto& [el, cl] : lhs.terms_) {
        for (const auto& [er, cr] : rhs.terms_) {
            ExpVec e;
            for (std::size_t k = 0; k < kVarCount; ++k)
                e[k] = el[k] + er[k];
            r.add_term(e, cl * cr);
        }
    }
    return r;
}

MPoly MPoly::pow(long e) const {
    if (e < 0)
        throw NegativeExponent();
    MPoly result(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

std::optional<long> MPoly::degree(Var var) const {
    if (terms_.empty())
        return std::nullopt;
    const auto idx = static_cast<std::size_t>(var);
    long d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(e[idx]));
    return d;
}

std::optional<long> MPoly::valuation(Var var) const {
    if (terms_.empty())
        return std::nullopt;
    const auto idx = static_cast<std::size_t>(var);
    long v = static_cast<long>(terms_.begin()->first[idx]);
    for (const auto& [e, c] : terms_)
        v = std::min(v, static_cast<long>(e[idx]));
    return v;
}

MPoly MPoly::subst(const std::vector<std::pair<Var, MPoly>>& bindings) const {
    std::array<const MPoly*, kVarCount> bound{};
    for (const auto& [var, value] : bindings) {
        auto& slot = bound[static_cast<std::size_t>(var)];
        if (slot != nullptr)
            throw Error("duplicate substitution for variable '" +
                        std::string(var_name(var)) + "'");
        slot = &value;
    }
    MPoly result;
    for (const auto& [e, c] : terms_) {
        ExpVec kept{};
        MPoly factor(c);
        for (std::size_t k = 0; k < kVarCount; ++k) {
            if (e[k] == 0)
                continue;
            if (bound[k] != nullptr)
                factor *= bound[k]->pow(static_cast<long>(e[k]));
            else
                kept[k] = e[k];
        }
        result += factor * monomial(Rational(1), kept);
    }
    return result;
}

std::string MPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        const Rational mag = negative ? Rational(-c) : c;
        std::string monomial;
        for (std::size_t k = 0; k < kVarCount; ++k) {
            if (e[k] == 0)
                continue;
            if (!monomial.empty())
                monomial += '*';
            monomial += var_name(static_cast<Var>(k));
            if (e[k] >= 2)
                monomial += '^' + std::to_string(e[k]);
        }
        if (monomial.empty())
            out << mag.get_str();
        else if (mag == 1)
            out << monomial;
        else
            out << mag.get_str() << '*' << monomial;
    }
    return out.str();
}

MPoly exact_div(const MPoly& p, const MPoly& q) {
    if (q.is_zero())
        throw DivisionByZero("polynomial division by the zero polynomial");
    MPoly rem = p;
    MPoly quot;
    const auto& qlead = *q.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        ExpVec e;
        for (std::size_t k = 0; k < kVarCount; ++k) {
            if (rlead.first[k] < qlead.first[k])
                throw NotDivisible();
            e[k] = rlead.first[k] - qlead.first[k];
        }
        const Rational c = rlead.second / qlead.second;
        quot.add_term(e, c);
        // rem -= (c * u^e) * q, accumulated in place
        for (const auto& [eq, cq] : q.terms()) {
            ExpVec es;
            for (std::size_t k = 0; k < kVarCount; ++k)
                es[k] = e[k] + eq[k];
            rem.add_term(es, -c * cq);
        }
    }
    return quot;
}

MPoly binom_poly(const MPoly& p, long k) {
    if (k < 0)
        return MPoly();
    MPoly prod(1);
    for (long i = 0; i < k; ++i)
        prod *= p - MPoly(i);
    return prod * MPoly(make_rational(Integer(1), factorial(k)));
}

MPoly pochhammer_poly(const MPoly& p, long m) {
    if (m < 0)
        throw Error("pochhammer_poly requires a nonnegative index");
    MPoly prod(1);
    for (long i = 0; i < m; ++i)
        prod *= p + MPoly(i);
    return prod;
}

} // namespace pascaldet
