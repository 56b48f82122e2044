#include "pascaldet/expr.hpp"

#include <cctype>

namespace pascaldet {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::size_t pos = 0;
    Rational number;
    std::string ident;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        current_ = Token{Token::Kind::end, pos_, Rational(0), {}};
        if (pos_ >= src_.size())
            return;
        const char c = src_[pos_];
        const std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = read_integer();
            // a contiguous INT '/' INT is one rational literal
            if (pos_ < src_.size() && src_[pos_] == '/') {
                if (pos_ + 1 >= src_.size() ||
                    !std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))
                    throw SyntaxError("expected digits after '/'", pos_ + 1);
                ++pos_;
                const Integer den = read_integer();
                current_ = Token{Token::Kind::number, start, make_rational(num, den), {}};
            } else {
                current_ = Token{Token::Kind::number, start, Rational(num), {}};
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name += src_[pos_++];
            current_ = Token{Token::Kind::ident, start, Rational(0), std::move(name)};
            return;
        }
        ++pos_;
        switch (c) {
        case '+':
            current_.kind = Token::Kind::plus;
            return;
        case '-':
            current_.kind = Token::Kind::minus;
            return;
        case '*':
            current_.kind = Token::Kind::star;
            return;
        case '^':
            current_.kind = Token::Kind::caret;
            return;
        case '(':
            current_.kind = Token::Kind::lparen;
            return;
        case ')':
            current_.kind = Token::Kind::rparen;
            return;
        default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }

    Integer read_integer() {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits += src_[pos_++];
        return Integer(digits);
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        if (lex_.peek().kind != Token::Kind::end)
            throw SyntaxError("trailing input", lex_.peek().pos);
        return e;
    }

private:
    static ExprPtr node(ExprAST::Kind kind) {
        auto n = std::make_unique<ExprAST>();
        n->kind = kind;
        return n;
    }

    ExprPtr sum() {
        ExprPtr e = product();
        for (;;) {
            const auto kind = lex_.peek().kind;
            if (kind != Token::Kind::plus && kind != Token::Kind::minus)
                return e;
            lex_.take();
            ExprPtr n = node(kind == Token::Kind::plus ? ExprAST::Kind::add
                                                       : ExprAST::Kind::sub);
            n->lhs = std::move(e);
            n->rhs = product();
            e = std::move(n);
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (lex_.peek().kind == Token::Kind::star) {
            lex_.take();
            ExprPtr n = node(ExprAST::Kind::mul);
            n->lhs = std::move(e);
            n->rhs = unary();
            e = std::move(n);
        }
        return e;
    }

    ExprPtr unary() {
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            ExprPtr n = node(ExprAST::Kind::negate);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        while (lex_.peek().kind == Token::Kind::caret) {
            lex_.take();
            ExprPtr n = node(ExprAST::Kind::pow);
            n->lhs = std::move(base);
            n->exponent = exponent_literal();
            base = std::move(n);
        }
        return base;
    }

    long exponent_literal() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::lparen) {
            lex_.take();
            const long e = exponent_literal();
            expect(Token::Kind::rparen, "expected ')'");
            return e;
        }
        if (t.kind == Token::Kind::minus) {
            lex_.take();
            (void)exponent_literal();
            throw NegativeExponent();
        }
        if (t.kind == Token::Kind::number) {
            const Token num = lex_.take();
            if (!is_integer(num.number))
                throw SyntaxError("exponent must be an integer literal", num.pos);
            return to_long(num.number);
        }
        throw SyntaxError("expected an exponent", t.pos);
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Kind::number: {
            ExprPtr n = node(ExprAST::Kind::number);
            n->number = t.number;
            return n;
        }
        case Token::Kind::ident: {
            const auto v = var_from_name(t.ident);
            if (!v)
                throw UnknownVariable(t.ident);
            ExprPtr n = node(ExprAST::Kind::variable);
            n->variable = *v;
            return n;
        }
        case Token::Kind::lparen: {
            ExprPtr inner = sum();
            expect(Token::Kind::rparen, "expected ')'");
            ExprPtr n = node(ExprAST::Kind::group);
            n->lhs = std::move(inner);
            return n;
        }
        default:
            throw SyntaxError("expected a number, variable or '('", t.pos);
        }
    }

    void expect(Token::Kind kind, const std::string& what) {
        if (lex_.peek().kind != kind)
            throw SyntaxError(what, lex_.peek().pos);
        lex_.take();
    }

    Lexer lex_;
};

} // namespace

ExprPtr parse_expr(const std::string& src) { return Parser(src).parse(); }

MPoly lower(const ExprAST& ast) {
    switch (ast.kind) {
    case ExprAST::Kind::number:
        return MPoly(ast.number);
    case ExprAST::Kind::variable:
        return MPoly::variable(ast.variable);
    case ExprAST::Kind::negate:
        return -lower(*ast.lhs);
    case ExprAST::Kind::add:
        return lower(*ast.lhs) + lower(*ast.rhs);
    case ExprAST::Kind::sub:
        return lower(*ast.lhs) - lower(*ast.rhs);
    case ExprAST::Kind::mul:
        return lower(*ast.lhs) * lower(*ast.rhs);
    case ExprAST::Kind::pow:
        return lower(*ast.lhs).pow(ast.exponent);
    case ExprAST::Kind::group:
        return lower(*ast.lhs);
    }
    throw Error("unreachable AST kind");
}

MPoly parse_poly(const std::string& src) { return lower(*parse_expr(src)); }

} // namespace pascaldet
