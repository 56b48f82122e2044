#ifndef PASCALDET_EXPR_HPP
#define PASCALDET_EXPR_HPP

#include <memory>
#include <string>

#include "pascaldet/mpoly.hpp"

namespace pascaldet {

// Expression AST for matrix-entry input. Numbers are rational literals
// ("3" or "1/2", lexed as one token); exponents are nonnegative integer
// literals; variables come from the fixed alphabet.
struct ExprAST {
    enum class Kind { number, variable, negate, add, sub, mul, pow, group };

    Kind kind;
    Rational number;    // number
    Var variable{};     // variable
    long exponent = 0;  // pow
    std::unique_ptr<ExprAST> lhs, rhs;
};

using ExprPtr = std::unique_ptr<ExprAST>;

// Standard precedence: power > unary minus > * > binary +/-; the binary
// operators associate to the left.
ExprPtr parse_expr(const std::string& src);

MPoly lower(const ExprAST& ast);

// parse + lower in one step.
MPoly parse_poly(const std::string& src);

} // namespace pascaldet

#endif
