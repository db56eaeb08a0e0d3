#include "detcert/binary_matrix.hpp"

#include "detcert/errors.hpp"

namespace detcert {

Matrix01 Matrix01::from_code(std::size_t order, std::uint64_t code) {
    const std::size_t bits = order * order;
    if (bits > 64) throw OrderTooLarge("Matrix01::from_code supports order^2 <= 64");
    Matrix01 result(order);
    for (std::size_t i = 0; i < bits; ++i)
        result.entries_[i] = static_cast<std::uint8_t>((code >> (bits - 1 - i)) & 1u);
    return result;
}

std::uint64_t Matrix01::to_code() const {
    const std::size_t bits = order_ * order_;
    if (bits > 64) throw OrderTooLarge("Matrix01::to_code supports order^2 <= 64");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < bits; ++i) code = (code << 1) | entries_[i];
    return code;
}

void Matrix01::set(std::size_t row, std::size_t col, std::uint8_t value) {
    if (value > 1) throw std::invalid_argument("Matrix01 entries must be 0 or 1");
    entries_[row * order_ + col] = value;
}

IntMatrix Matrix01::to_int_matrix() const {
    IntMatrix result(order_, order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) result.at(i, j) = BigInt(at(i, j));
    return result;
}

void MatrixPM1::set(std::size_t row, std::size_t col, std::int8_t value) {
    if (value != 1 && value != -1)
        throw std::invalid_argument("MatrixPM1 entries must be -1 or +1");
    entries_[row * order_ + col] = value;
}

void MatrixPM1::negate_row(std::size_t row) {
    for (std::size_t j = 0; j < order_; ++j)
        entries_[row * order_ + j] = static_cast<std::int8_t>(-entries_[row * order_ + j]);
}

void MatrixPM1::negate_col(std::size_t col) {
    for (std::size_t i = 0; i < order_; ++i)
        entries_[i * order_ + col] = static_cast<std::int8_t>(-entries_[i * order_ + col]);
}

IntMatrix MatrixPM1::to_int_matrix() const {
    IntMatrix result(order_, order_);
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) result.at(i, j) = BigInt(at(i, j));
    return result;
}

}  // namespace detcert
