#include "detcert/node_simplex.hpp"

#include "detcert/errors.hpp"

namespace detcert {

NodeMatrix::NodeMatrix(RatMatrix entries) : matrix_(std::move(entries)) {
    if (!matrix_.is_square() || matrix_.rows() < 2)
        throw DimensionMismatch("node matrix must be square of order >= 2");
    const std::size_t last = matrix_.cols() - 1;
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        if (matrix_.at(i, last) != Rational(1))
            throw DimensionMismatch("node matrix must have an all-ones last column");
}

std::vector<Rational> NodeMatrix::vertex(std::size_t j) const {
    const std::size_t n = dimension();
    std::vector<Rational> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = matrix_.at(j, i);
    return point;
}

std::vector<std::vector<Rational>> NodeMatrix::vertices() const {
    std::vector<std::vector<Rational>> result;
    result.reserve(dimension() + 1);
    for (std::size_t j = 0; j <= dimension(); ++j) result.push_back(vertex(j));
    return result;
}

NodeMatrix border_01(const Matrix01& m) {
    const std::size_t n = m.order();
    if (n == 0) throw DimensionMismatch("cannot border an empty matrix");
    RatMatrix entries(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) entries.at(i, j) = Rational(m.at(i, j));
        entries.at(i, n) = Rational(1);
    }
    entries.at(n, n) = Rational(1);
    return NodeMatrix(std::move(entries));
}

NodeMatrix node_from_vertices(const std::vector<std::vector<Rational>>& points) {
    if (points.size() < 2) throw DimensionMismatch("a simplex needs at least two vertices");
    const std::size_t n = points.size() - 1;
    RatMatrix entries(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (points[j].size() != n)
            throw DimensionMismatch("expected n+1 points of n coordinates each");
        for (std::size_t i = 0; i < n; ++i) entries.at(j, i) = points[j][i];
        entries.at(j, n) = Rational(1);
    }
    return NodeMatrix(std::move(entries));
}

LagrangeData lagrange_data(const NodeMatrix& a) {
    try {
        return LagrangeData{a.dimension(), inverse_exact(a.matrix())};
    } catch (const SingularMatrix&) {
        throw DegenerateSimplex();
    }
}

std::vector<Rational> barycentric_at(const LagrangeData& lagrange,
                                     std::span<const Rational> point) {
    const std::size_t n = lagrange.dimension;
    if (point.size() != n)
        throw DimensionMismatch("point dimension differs from simplex dimension");
    std::vector<Rational> lambdas(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Rational value = lagrange.coeff(n, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (lagrange.coeff(i, j).is_zero() || point[i].is_zero()) continue;
            value += lagrange.coeff(i, j) * point[i];
        }
        lambdas[j] = std::move(value);
    }
    return lambdas;
}

bool simplex_contains(const LagrangeData& lagrange, std::span<const Rational> point) {
    for (const Rational& lambda : barycentric_at(lagrange, point))
        if (lambda.is_negative()) return false;
    return true;
}

}  // namespace detcert
