#pragma once

#include "detcert/bigint.hpp"
#include "detcert/binary_matrix.hpp"

namespace detcert {

// Sign normalization of a +/-1 matrix: first negate every column whose top
// entry is -1, then every row whose first entry is -1. The result has an
// all-ones first row and first column and the same |det|. Idempotent.
MatrixPM1 normalize_pm1(const MatrixPM1& u);

// +/-1 matrix of order n+1 -> 0/1 matrix of order n: normalize, drop the
// first row and column, then map +1 -> 0 and -1 -> 1. Satisfies
// 2^n |det(T)| = |det(U)|. Requires order >= 2.
//
// Entry-wise this is the affine map x -> (1-x)/2 carrying [-1,1]^n onto
// [0,1]^n, which is where the 2^n volume factor comes from; the map itself
// is not exposed as a geometric operation.
Matrix01 pm1_to_01(const MatrixPM1& u);

// Inverse construction: 0/1 matrix of order n -> +/-1 matrix of order n+1
// with all-ones first row and column and |det(V)| = 2^n |det(t)|.
MatrixPM1 zero_one_to_pm1(const Matrix01& t);

// Determinant-ratio identity, evaluated exactly on both sides.
struct DetRatioCheck {
    BigInt lhs;   // 2^n * |det(pm1_to_01(u))|
    BigInt rhs;   // |det(u)|
    bool holds = false;
};

DetRatioCheck check_det_ratio(const MatrixPM1& u);

}  // namespace detcert
