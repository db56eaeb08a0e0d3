#pragma once

#include <span>
#include <vector>

#include "detcert/binary_matrix.hpp"
#include "detcert/linalg.hpp"
#include "detcert/matrix.hpp"

namespace detcert {

// Node matrix of an n-simplex: (n+1) x (n+1), row j holds vertex x^(j)
// followed by a trailing 1.
class NodeMatrix {
public:
    explicit NodeMatrix(RatMatrix entries);

    // simplex dimension n (matrix order is n+1)
    std::size_t dimension() const noexcept { return matrix_.rows() - 1; }
    const RatMatrix& matrix() const noexcept { return matrix_; }

    std::vector<Rational> vertex(std::size_t j) const;
    std::vector<std::vector<Rational>> vertices() const;

private:
    RatMatrix matrix_;
};

// Borders a 0/1 matrix of order n into the node matrix of order n+1: appends
// the column of 1's and the row (0,...,0,1). Vertex j (0 <= j < n) is row j
// of m; vertex n is the origin.
NodeMatrix border_01(const Matrix01& m);

// Node matrix from explicit vertices: n+1 points of n rational coordinates.
NodeMatrix node_from_vertices(const std::vector<std::vector<Rational>>& points);

// Columns of coeffs are the coefficient vectors of the basic Lagrange
// polynomials: lambda_j(x) = sum_i coeff(i,j) x_i + coeff(n,j).
struct LagrangeData {
    std::size_t dimension = 0;        // n
    RatMatrix coeffs;                 // (n+1) x (n+1), equals A^{-1}

    const Rational& coeff(std::size_t i, std::size_t j) const { return coeffs.at(i, j); }
};

// coeffs = A^{-1}. Throws DegenerateSimplex when det(A) = 0.
LagrangeData lagrange_data(const NodeMatrix& a);

// Barycentric coordinates (lambda_1(x), ..., lambda_{n+1}(x)) of a point.
std::vector<Rational> barycentric_at(const LagrangeData& lagrange,
                                     std::span<const Rational> point);

// Membership test: all barycentric coordinates nonnegative.
bool simplex_contains(const LagrangeData& lagrange, std::span<const Rational> point);

}  // namespace detcert
