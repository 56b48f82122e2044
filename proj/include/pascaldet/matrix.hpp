#ifndef PASCALDET_MATRIX_HPP
#define PASCALDET_MATRIX_HPP

#include <vector>

#include "pascaldet/mpoly.hpp"
#include "pascaldet/ratfunc.hpp"

namespace pascaldet {

// Dense rectangular matrix over an exact ring element type.
template <typename T>
class RingMatrix {
public:
    RingMatrix() : rows_(0), cols_(0) {}
    RingMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 1 || cols < 1)
            throw Error("matrix dimensions must be positive");
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(long i, long j) { return data_[index(i, j)]; }
    const T& operator()(long i, long j) const { return data_[index(i, j)]; }

    RingMatrix transpose() const {
        RingMatrix r(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    // Contiguous square block with upper-left corner (i0, j0).
    RingMatrix block(long i0, long j0, long size) const {
        RingMatrix r(size, size);
        for (long i = 0; i < size; ++i)
            for (long j = 0; j < size; ++j)
                r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    friend bool operator==(const RingMatrix& lhs, const RingMatrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }

private:
    std::size_t index(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw IndexOutOfRange("matrix index (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range");
        return static_cast<std::size_t>(i * cols_ + j);
    }

    long rows_, cols_;
    std::vector<T> data_;
};

using PolyMatrix = RingMatrix<MPoly>;
using RatFuncMatrix = RingMatrix<RatFunc>;

} // namespace pascaldet

#endif
