#ifndef PASCALDET_MPOLY_HPP
#define PASCALDET_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pascaldet/rational.hpp"

namespace pascaldet {

// The fixed, ordered variable alphabet. Exponent vectors are dense over it,
// so two polynomials are equal iff their term maps are identical.
enum class Var : std::uint8_t { x, rho, sigma, a, X, Y, u, v, t, W };

inline constexpr std::size_t kVarCount = 10;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using ExpVec = std::array<std::uint32_t, kVarCount>;

inline std::uint64_t total_degree(const ExpVec& e) {
    std::uint64_t d = 0;
    for (auto k : e)
        d += k;
    return d;
}

// Graded-lexicographic order with the largest term first: higher total degree
// wins, ties go to the leftmost variable with the larger exponent. Map
// iteration is therefore already the canonical rendering order, and begin()
// is the leading term.
struct GrlexGreater {
    bool operator()(const ExpVec& lhs, const ExpVec& rhs) const {
        const auto dl = total_degree(lhs), dr = total_degree(rhs);
        if (dl != dr)
            return dl > dr;
        return lhs > rhs;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients.
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rational, GrlexGreater>;

    MPoly() = default;
    MPoly(int c) : MPoly(Rational(c)) {}
    MPoly(long c) : MPoly(Rational(static_cast<long>(c))) {}
    MPoly(const Integer& c) : MPoly(Rational(c)) {}
    MPoly(const Rational& c) {
        if (c != 0)
            terms_.emplace(ExpVec{}, c);
    }

    static MPoly variable(Var v) {
        ExpVec e{};
        e[static_cast<std::size_t>(v)] = 1;
        return monomial(Rational(1), e);
    }

    static MPoly monomial(const Rational& coeff, const ExpVec& exps) {
        MPoly p;
        if (coeff != 0)
            p.terms_.emplace(exps, coeff);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // The value as a Rational if the polynomial is constant (including 0).
    std::optional<Rational> as_constant() const {
        if (terms_.empty())
            return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first == ExpVec{})
            return terms_.begin()->second;
        return std::nullopt;
    }

    Rational coeff(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExpVec& e, const Rational& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator-() const;
    MPoly& operator*=(const MPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend MPoly operator+(MPoly lhs, const MPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    friend bool operator==(const MPoly& lhs, const MPoly& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    MPoly pow(long e) const;

    // Highest exponent of var; nullopt encodes minus infinity (zero poly).
    std::optional<long> degree(Var var) const;
    // Lowest exponent of var across terms; nullopt for the zero polynomial.
    std::optional<long> valuation(Var var) const;

    // Simultaneous substitution; bindings must name distinct variables.
    MPoly subst(const std::vector<std::pair<Var, MPoly>>& bindings) const;

    // Canonical rendering: graded-lex term order, "p" or "p/q" coefficients.
    std::string str() const;

private:
    TermMap terms_;
};

inline MPoly var_poly(Var v) { return MPoly::variable(v); }

// Exact division in the polynomial ring: returns r with r*q == p.
// Throws DivisionByZero for q == 0 and NotDivisible when q does not divide p.
MPoly exact_div(const MPoly& p, const MPoly& q);

// Binomial polynomial: p (p-1) ... (p-k+1) / k! for k >= 0, zero for k < 0.
MPoly binom_poly(const MPoly& p, long k);

// Rising factorial (p)_m = p (p+1) ... (p+m-1), m >= 0.
MPoly pochhammer_poly(const MPoly& p, long m);

} // namespace pascaldet

#endif
