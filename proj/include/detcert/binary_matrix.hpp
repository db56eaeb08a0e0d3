#pragma once

#include <cstdint>
#include <vector>

#include "detcert/matrix.hpp"

namespace detcert {

// Square matrix with entries in {0, 1}.
class Matrix01 {
public:
    Matrix01() = default;
    explicit Matrix01(std::size_t order) : order_(order), entries_(order * order, 0) {}

    // Decodes the row-major bit string of `code`: the most significant of the
    // order^2 bits is entry (0,0). Requires order^2 <= 64.
    static Matrix01 from_code(std::size_t order, std::uint64_t code);
    std::uint64_t to_code() const;  // requires order^2 <= 64

    std::size_t order() const noexcept { return order_; }
    std::uint8_t at(std::size_t row, std::size_t col) const {
        return entries_[row * order_ + col];
    }
    void set(std::size_t row, std::size_t col, std::uint8_t value);

    IntMatrix to_int_matrix() const;

    bool operator==(const Matrix01& rhs) const = default;

private:
    std::size_t order_ = 0;
    std::vector<std::uint8_t> entries_;
};

// Square matrix with entries in {-1, +1}.
class MatrixPM1 {
public:
    MatrixPM1() = default;
    explicit MatrixPM1(std::size_t order) : order_(order), entries_(order * order, 1) {}

    std::size_t order() const noexcept { return order_; }
    std::int8_t at(std::size_t row, std::size_t col) const {
        return entries_[row * order_ + col];
    }
    void set(std::size_t row, std::size_t col, std::int8_t value);
    void negate_row(std::size_t row);
    void negate_col(std::size_t col);

    IntMatrix to_int_matrix() const;

    bool operator==(const MatrixPM1& rhs) const = default;

private:
    std::size_t order_ = 0;
    std::vector<std::int8_t> entries_;
};

}  // namespace detcert
