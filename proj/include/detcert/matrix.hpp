#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "detcert/bigint.hpp"
#include "detcert/rational.hpp"

namespace detcert {

// Dense row-major matrix over an exact scalar type.
template <typename Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t order) {
        Matrix result(order, order);
        for (std::size_t i = 0; i < order; ++i) result.at(i, i) = Scalar(1);
        return result;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& at(std::size_t row, std::size_t col) {
        assert(row < rows_ && col < cols_);
        return entries_[row * cols_ + col];
    }
    const Scalar& at(std::size_t row, std::size_t col) const {
        assert(row < rows_ && col < cols_);
        return entries_[row * cols_ + col];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        assert(a < rows_ && b < rows_);
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
    }

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

}  // namespace detcert
