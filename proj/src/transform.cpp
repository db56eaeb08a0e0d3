#include "detcert/transform.hpp"

#include "detcert/errors.hpp"
#include "detcert/linalg.hpp"

namespace detcert {

MatrixPM1 normalize_pm1(const MatrixPM1& u) {
    MatrixPM1 v = u;
    const std::size_t n = v.order();
    for (std::size_t c = 0; c < n; ++c)
        if (v.at(0, c) == -1) v.negate_col(c);
    for (std::size_t r = 0; r < n; ++r)
        if (v.at(r, 0) == -1) v.negate_row(r);
    return v;
}

Matrix01 pm1_to_01(const MatrixPM1& u) {
    if (u.order() < 2)
        throw DimensionMismatch("pm1_to_01 needs order >= 2 (output has order n = input - 1)");
    MatrixPM1 v = normalize_pm1(u);
    const std::size_t n = v.order() - 1;
    Matrix01 t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.set(i, j, v.at(i + 1, j + 1) == 1 ? 0 : 1);
    return t;
}

MatrixPM1 zero_one_to_pm1(const Matrix01& t) {
    const std::size_t n = t.order();
    MatrixPM1 v(n + 1);  // initialized to all +1
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v.set(i + 1, j + 1, t.at(i, j) == 0 ? 1 : -1);
    return v;
}

DetRatioCheck check_det_ratio(const MatrixPM1& u) {
    if (u.order() < 2) throw DimensionMismatch("check_det_ratio needs order >= 2");
    const unsigned n = static_cast<unsigned>(u.order() - 1);
    DetRatioCheck result;
    result.lhs = BigInt::power_of_two(n) * det_exact(pm1_to_01(u).to_int_matrix()).abs();
    result.rhs = det_exact(u.to_int_matrix()).abs();
    result.holds = result.lhs == result.rhs;
    return result;
}

}  // namespace detcert
