#include "detcert/certify.hpp"

#include "detcert/errors.hpp"
#include "detcert/linalg.hpp"

namespace detcert {

RowSums row_abs_sums(const LagrangeData& lagrange) {
    const std::size_t n = lagrange.dimension;
    RowSums result{n, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum;
        for (std::size_t j = 0; j <= n; ++j) sum += lagrange.coeff(i, j).abs();
        result.sums[i] = std::move(sum);
    }
    return result;
}

Verdict verdict_from(BigInt det, RowSums sums) {
    const Rational two(2);
    Verdict verdict;
    for (std::size_t i = 0; i < sums.sums.size(); ++i) {
        if (sums.sums[i] > two) {
            verdict.witness_rows.push_back(i + 1);
        } else if (sums.sums[i] < two) {
            throw InternalError("row sum below 2: input was not a nondegenerate 0/1 matrix");
        }
    }
    verdict.kind = verdict.witness_rows.empty() ? VerdictKind::NecessaryConditionHolds
                                                : VerdictKind::NotMaximal;
    verdict.det_value = std::move(det);
    verdict.sums = std::move(sums);
    return verdict;
}

Verdict certify_01(const Matrix01& m) {
    BigInt det = det_exact(m.to_int_matrix());
    if (det.is_zero()) throw SingularMatrix("0/1 matrix is singular; the row-sum test needs det != 0");
    LagrangeData lagrange = lagrange_data(border_01(m));
    return verdict_from(std::move(det), row_abs_sums(lagrange));
}

}  // namespace detcert
