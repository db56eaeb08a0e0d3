#pragma once

#include <cstddef>
#include <vector>

#include "detcert/binary_matrix.hpp"
#include "detcert/node_simplex.hpp"

namespace detcert {

// Absolute row sums of A^{-1}: sums[k] = s_{k+1} = sum_j |l_{k+1,j}|, one per
// matrix row (the bordering row n+1 is excluded). For a nondegenerate 0/1
// input every sum is >= 2, with equality forced whenever |det| is maximal.
struct RowSums {
    std::size_t order = 0;
    std::vector<Rational> sums;
};

enum class VerdictKind {
    NotMaximal,                // some s_i > 2: |det| is provably below the maximum
    NecessaryConditionHolds,   // all s_i = 2: maximality is possible but not implied
};

struct Verdict {
    VerdictKind kind = VerdictKind::NecessaryConditionHolds;
    std::vector<std::size_t> witness_rows;  // 1-based rows with s_i > 2, ascending
    BigInt det_value;                       // det of the input 0/1 matrix
    RowSums sums;
};

RowSums row_abs_sums(const LagrangeData& lagrange);

// Assembles the verdict from a known determinant and row sums. Throws
// InternalError if any sum is below 2 (impossible for genuine 0/1 input).
Verdict verdict_from(BigInt det, RowSums sums);

// Full pipeline: border, invert, sum, judge. Throws SingularMatrix when
// det(m) = 0.
Verdict certify_01(const Matrix01& m);

}  // namespace detcert
