#include "pascaldet/detengine.hpp"

#include <utility>

namespace pascaldet {

namespace {

constexpr long kCofactorLimit = 7;

MPoly cofactor_rec(const PolyMatrix& m) {
    const long n = m.rows();
    if (n == 1)
        return m(0, 0);
    if (n == 2)
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    MPoly det;
    for (long j = 0; j < n; ++j) {
        if (m(0, j).is_zero())
            continue;
        PolyMatrix minor(n - 1, n - 1);
        for (long i = 1; i < n; ++i) {
            long cc = 0;
            for (long c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        MPoly term = m(0, j) * cofactor_rec(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace

MPoly det_cofactor(const PolyMatrix& m) {
    if (!m.is_square())
        throw NotSquare();
    if (m.rows() > kCofactorLimit)
        throw DimensionTooLarge(m.rows(), kCofactorLimit);
    return cofactor_rec(m);
}

MPoly det_bareiss(const PolyMatrix& m) {
    if (!m.is_square())
        throw NotSquare();
    const long n = m.rows();
    PolyMatrix w = m;
    MPoly prev(1);
    bool negate = false;
    for (long k = 0; k + 1 < n; ++k) {
        if (w(k, k).is_zero()) {
            long swap_row = -1;
            for (long r = k + 1; r < n; ++r) {
                if (!w(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row < 0)
                return MPoly();
            for (long c = 0; c < n; ++c)
                std::swap(w(k, c), w(swap_row, c));
            negate = !negate;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j)
                w(i, j) = exact_div(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev);
            w(i, k) = MPoly();
        }
        prev = w(k, k);
    }
    return negate ? -w(n - 1, n - 1) : w(n - 1, n - 1);
}

MPoly det_condensation(const PolyMatrix& m) {
    if (!m.is_square())
        throw NotSquare();
    const long n = m.rows();
    if (n == 1)
        return m(0, 0);

    // layer s holds every contiguous s x s minor; entry (i,j) of the layer is
    // the minor with upper-left corner (i,j) in the original matrix
    PolyMatrix prev = m; // s = 1
    PolyMatrix cur(n - 1, n - 1); // s = 2
    for (long i = 0; i + 1 < n; ++i)
        for (long j = 0; j + 1 < n; ++j)
            cur(i, j) = m(i, j) * m(i + 1, j + 1) - m(i, j + 1) * m(i + 1, j);

    for (long s = 3; s <= n; ++s) {
        PolyMatrix next(n - s + 1, n - s + 1);
        for (long i = 0; i + s - 1 < n; ++i) {
            for (long j = 0; j + s - 1 < n; ++j) {
                const MPoly& interior = prev(i + 1, j + 1);
                if (interior.is_zero()) {
                    next(i, j) = det_bareiss(m.block(i, j, s));
                } else {
                    next(i, j) = exact_div(cur(i, j) * cur(i + 1, j + 1) -
                                               cur(i, j + 1) * cur(i + 1, j),
                                           interior);
                }
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur(0, 0);
}

} // namespace pascaldet
