#include "detcert/linalg.hpp"

#include <cstddef>
#include <optional>

#include "detcert/errors.hpp"

namespace detcert {

namespace {

void require_square(const IntMatrix& m) {
    if (!m.is_square() || m.rows() == 0)
        throw DimensionMismatch("expected a nonempty square matrix");
}

void require_square(const RatMatrix& m) {
    if (!m.is_square() || m.rows() == 0)
        throw DimensionMismatch("expected a nonempty square matrix");
}

// Bareiss steps divide exactly; a nonzero remainder means a broken invariant.
BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
    BigInt quotient, remainder;
    BigInt::divmod(numerator, denominator, quotient, remainder);
    if (!remainder.is_zero())
        throw InternalError("fraction-free elimination produced an inexact division");
    return quotient;
}

std::optional<std::size_t> first_nonzero_in_column(const IntMatrix& m, std::size_t col,
                                                   std::size_t from_row) {
    for (std::size_t r = from_row; r < m.rows(); ++r)
        if (!m.at(r, col).is_zero()) return r;
    return std::nullopt;
}

// Per-row denominator clearing: returns an integer matrix B with
// B[i][j] = m[i][j] * scale[i], where scale[i] is the lcm of the
// denominators in row i.
IntMatrix clear_row_denominators(const RatMatrix& m, std::vector<BigInt>& scale) {
    IntMatrix result(m.rows(), m.cols());
    scale.assign(m.rows(), BigInt(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale[i] = BigInt::lcm(scale[i], m.at(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            result.at(i, j) = m.at(i, j).num() * (scale[i] / m.at(i, j).den());
    }
    return result;
}

}  // namespace

BigInt det_exact(const IntMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();
    IntMatrix work = m;
    BigInt prev_pivot(1);
    bool negated = false;

    for (std::size_t k = 0; k < n; ++k) {
        auto pivot_row = first_nonzero_in_column(work, k, k);
        if (!pivot_row) return BigInt(0);
        if (*pivot_row != k) {
            work.swap_rows(*pivot_row, k);
            negated = !negated;
        }
        if (k + 1 == n) break;
        const BigInt& pivot = work.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                work.at(i, j) = exact_div(pivot * work.at(i, j) - work.at(i, k) * work.at(k, j),
                                          prev_pivot);
            }
            work.at(i, k) = BigInt(0);
        }
        prev_pivot = pivot;
    }
    BigInt det = work.at(n - 1, n - 1);
    if (negated) det.negate();
    return det;
}

Rational det_exact(const RatMatrix& m) {
    require_square(m);
    std::vector<BigInt> scale;
    IntMatrix cleared = clear_row_denominators(m, scale);
    BigInt denominator(1);
    for (const BigInt& s : scale) denominator *= s;
    return Rational(det_exact(cleared), denominator);
}

RatMatrix inverse_exact(const IntMatrix& m) {
    require_square(m);
    const std::size_t n = m.rows();

    // augmented [m | I], eliminated fraction-free both above and below the
    // pivot; on exit the left block is p*I and the right block p*m^{-1}
    IntMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = BigInt(1);
    }

    BigInt prev_pivot(1);
    for (std::size_t k = 0; k < n; ++k) {
        auto pivot_row = first_nonzero_in_column(aug, k, k);
        if (!pivot_row) throw SingularMatrix();
        aug.swap_rows(*pivot_row, k);
        const BigInt pivot = aug.at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const BigInt lead = aug.at(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                if (aug.at(i, j).is_zero() && aug.at(k, j).is_zero()) continue;
                aug.at(i, j) =
                    exact_div(pivot * aug.at(i, j) - lead * aug.at(k, j), prev_pivot);
            }
            aug.at(i, k) = BigInt(0);
        }
        prev_pivot = pivot;
    }

    RatMatrix inverse(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inverse.at(i, j) = Rational(aug.at(i, n + j), prev_pivot);
    return inverse;
}

RatMatrix inverse_exact(const RatMatrix& m) {
    require_square(m);
    std::vector<BigInt> scale;
    IntMatrix cleared = clear_row_denominators(m, scale);
    // m = diag(scale)^{-1} * cleared, so m^{-1} = cleared^{-1} * diag(scale)
    RatMatrix inverse = inverse_exact(cleared);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            inverse.at(i, j) *= Rational(scale[j]);
    return inverse;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    IntMatrix result(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                result.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return result;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
    RatMatrix result(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                result.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return result;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix result(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) result.at(i, j) = Rational(m.at(i, j));
    return result;
}

}  // namespace detcert
