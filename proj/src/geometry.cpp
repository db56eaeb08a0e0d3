#include "detcert/geometry.hpp"

#include "detcert/errors.hpp"

namespace detcert {

namespace {

Rational row_abs_sum(const LagrangeData& lagrange, std::size_t row) {
    Rational sum;
    for (std::size_t j = 0; j <= lagrange.dimension; ++j) sum += lagrange.coeff(row, j).abs();
    return sum;
}

}  // namespace

std::vector<Rational> axial_diameters(const LagrangeData& lagrange) {
    const std::size_t n = lagrange.dimension;
    std::vector<Rational> diameters(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational sum = row_abs_sum(lagrange, i);
        if (sum.is_zero())
            throw InternalError("zero |l_ij| row sum for a nondegenerate simplex");
        diameters[i] = Rational(2) / sum;
    }
    return diameters;
}

std::vector<Rational> segment_center(const LagrangeData& lagrange, const NodeMatrix& node,
                                     std::size_t axis) {
    const std::size_t n = lagrange.dimension;
    if (axis >= n) throw DimensionMismatch("axis index out of range");
    const Rational total = row_abs_sum(lagrange, axis);
    std::vector<Rational> center(n);
    for (std::size_t j = 0; j <= n; ++j) {
        Rational weight = lagrange.coeff(axis, j).abs() / total;
        if (weight.is_zero()) continue;
        const std::vector<Rational> v = node.vertex(j);
        for (std::size_t i = 0; i < n; ++i) center[i] += weight * v[i];
    }
    return center;
}

Rational alpha_of(const LagrangeData& lagrange) {
    Rational sum;
    for (std::size_t i = 0; i < lagrange.dimension; ++i) sum += row_abs_sum(lagrange, i);
    return sum / Rational(2);
}

Rational xi_of(const LagrangeData& lagrange) {
    const std::size_t n = lagrange.dimension;

    // min over cube vertices of lambda_j is l_{n+1,j} + sum_i min(0, l_ij);
    // if it is nonnegative for every j, the cube lies inside the simplex.
    bool cube_inside = true;
    for (std::size_t j = 0; j <= n && cube_inside; ++j) {
        Rational min_lambda = lagrange.coeff(n, j);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& c = lagrange.coeff(i, j);
            if (c.is_negative()) min_lambda += c;
        }
        cube_inside = !min_lambda.is_negative();
    }
    if (cube_inside) return Rational(1);

    // max over cube vertices of -lambda_j is -l_{n+1,j} + sum_i max(0, -l_ij)
    Rational best;
    bool first = true;
    for (std::size_t j = 0; j <= n; ++j) {
        Rational value = -lagrange.coeff(n, j);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& c = lagrange.coeff(i, j);
            if (c.is_negative()) value -= c;
        }
        if (first || value > best) {
            best = std::move(value);
            first = false;
        }
    }
    return Rational(static_cast<long long>(n + 1)) * best + Rational(1);
}

GeometryReport geometry_report(const LagrangeData& lagrange, const NodeMatrix& node) {
    const std::size_t n = lagrange.dimension;
    GeometryReport report;
    report.axial_diameters = axial_diameters(lagrange);
    report.alpha = alpha_of(lagrange);
    report.xi = xi_of(lagrange);
    report.segment_centers.reserve(n);
    report.weights = RatMatrix(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        report.segment_centers.push_back(segment_center(lagrange, node, i));
        const Rational total = row_abs_sum(lagrange, i);
        for (std::size_t j = 0; j <= n; ++j)
            report.weights.at(i, j) = lagrange.coeff(i, j).abs() / total;
    }
    return report;
}

}  // namespace detcert
