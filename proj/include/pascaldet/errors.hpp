#ifndef PASCALDET_ERRORS_HPP
#define PASCALDET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pascaldet {

// Common base so callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Raised by exact polynomial division when a nonzero remainder shows up.
// Inside the Bareiss engine this signals an implementation bug, never data.
struct NotDivisible : Error {
    NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'") {}
};

struct NonInvertibleConstantTerm : Error {
    NonInvertibleConstantTerm()
        : Error("series denominator has no invertible (u,v)-constant term") {}
};

struct OutOfWindow : Error {
    OutOfWindow(long i, long j, long order)
        : Error("series coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                ") outside truncation window of order " + std::to_string(order)) {}
};

struct InconsistentCorner : Error {
    InconsistentCorner()
        : Error("row and column boundary generators disagree at index 0") {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(long dim, long limit)
        : Error("dimension " + std::to_string(dim) + " exceeds limit " + std::to_string(limit)) {}
};

struct DenominatorHitsZero : Error {
    DenominatorHitsZero()
        : Error("a lower Pochhammer vanishes at or before a contributing term") {}
    explicit DenominatorHitsZero(const std::string& what) : Error(what) {}
};

struct NonTerminating : Error {
    NonTerminating()
        : Error("no upper parameter is a nonpositive integer; series does not terminate") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct NegativeExponent : Error {
    NegativeExponent() : Error("exponent must be a nonnegative integer") {}
};

} // namespace pascaldet

#endif
