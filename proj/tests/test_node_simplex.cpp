#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detcert/errors.hpp"
#include "detcert/node_simplex.hpp"
#include "oracles.hpp"

using namespace detcert;
using namespace detcert::testing;

namespace {

Matrix01 identity01(std::size_t n) {
    Matrix01 m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

}  // namespace

TEST_CASE("border_01 construction") {
    CHECK(border_01(matrix01_from({{1}})).matrix() == rat_matrix({{1, 1}, {0, 1}}));
    CHECK(border_01(matrix01_from({{1, 1}, {1, 0}})).matrix() ==
          rat_matrix({{1, 1, 1}, {1, 0, 1}, {0, 0, 1}}));

    // bordered identity: ones on the diagonal and in the last column
    NodeMatrix a = border_01(identity01(3));
    CHECK(a.matrix() ==
          rat_matrix({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
}

TEST_CASE("det(border_01(m)) = det(m), exhaustive order <= 3 and sampled order 4") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::uint64_t space = std::uint64_t(1) << (n * n);
        for (std::uint64_t code = 0; code < space; ++code) {
            Matrix01 m = Matrix01::from_code(n, code);
            REQUIRE(det_exact(border_01(m).matrix()) ==
                    Rational(det_exact(m.to_int_matrix())));
        }
    }
    auto rng = test_rng(1);
    for (int iter = 0; iter < 200; ++iter) {
        Matrix01 m = random_01(4, rng);
        REQUIRE(det_exact(border_01(m).matrix()) == Rational(det_exact(m.to_int_matrix())));
    }
}

TEST_CASE("node_from_vertices") {
    CHECK(node_from_vertices({{Rational(0)}, {Rational(1)}}).matrix() ==
          rat_matrix({{0, 1}, {1, 1}}));
    CHECK(node_from_vertices({{Rational(1), Rational(0)},
                              {Rational(0), Rational(1)},
                              {Rational(0), Rational(0)}})
              .matrix() == rat_matrix({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
    CHECK_THROWS_AS(node_from_vertices({{Rational(1)}, {Rational(0), Rational(1)}}),
                    DimensionMismatch);

    // rows of a 0/1 matrix plus the zero vertex reproduce border_01
    auto rng = test_rng(2);
    for (int iter = 0; iter < 50; ++iter) {
        Matrix01 m = random_01(3, rng);
        std::vector<std::vector<Rational>> points;
        for (std::size_t i = 0; i < 3; ++i) {
            std::vector<Rational> p(3);
            for (std::size_t j = 0; j < 3; ++j) p[j] = Rational(m.at(i, j));
            points.push_back(std::move(p));
        }
        points.emplace_back(3);  // origin
        REQUIRE(node_from_vertices(points).matrix() == border_01(m).matrix());
    }
}

TEST_CASE("lagrange_data matches the displayed corner inverse") {
    for (std::size_t n : {1, 2, 4}) {
        LagrangeData lagrange = lagrange_data(border_01(identity01(n)));
        RatMatrix expected(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            expected.at(i, i) = Rational(1);
            expected.at(i, n) = Rational(-1);
        }
        expected.at(n, n) = Rational(1);
        CAPTURE(n);
        REQUIRE(lagrange.coeffs == expected);
    }
}

TEST_CASE("lagrange_data examples and degeneracy") {
    // bordered [[1,1,1],[0,1,1],[1,1,0]]: second row of A^{-1} is (-1,1,1,-1)
    LagrangeData lagrange = lagrange_data(border_01(matrix01_from({{1, 1, 1}, {0, 1, 1}, {1, 1, 0}})));
    CHECK(lagrange.coeff(1, 0) == Rational(-1));
    CHECK(lagrange.coeff(1, 1) == Rational(1));
    CHECK(lagrange.coeff(1, 2) == Rational(1));
    CHECK(lagrange.coeff(1, 3) == Rational(-1));

    // 1-D segment [0,1]: lambda_1 = 1-x, lambda_2 = x
    LagrangeData segment = lagrange_data(node_from_vertices({{Rational(0)}, {Rational(1)}}));
    CHECK(segment.coeffs == rat_matrix({{-1, 1}, {1, 0}}));

    CHECK_THROWS_AS(lagrange_data(border_01(matrix01_from({{1, 1}, {1, 1}}))),
                    DegenerateSimplex);

    // mat_mul(A, coeffs) = identity
    NodeMatrix a = border_01(matrix01_from({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(mat_mul(a.matrix(), lagrange_data(a).coeffs) ==
          to_rational(IntMatrix::identity(4)));
}

TEST_CASE("barycentric coordinates at vertices are Kronecker deltas") {
    auto rng = test_rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 1 + iter % 5;
        Matrix01 m = random_nonsingular_01(n, rng);
        NodeMatrix node = border_01(m);
        LagrangeData lagrange = lagrange_data(node);
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<Rational> lambdas = barycentric_at(lagrange, node.vertex(k));
            for (std::size_t j = 0; j <= n; ++j)
                REQUIRE(lambdas[j] == (j == k ? Rational(1) : Rational(0)));
            REQUIRE(simplex_contains(lagrange, node.vertex(k)));
        }
    }
}

TEST_CASE("corner simplex barycentric example") {
    LagrangeData lagrange = lagrange_data(border_01(identity01(2)));
    Rational quarter(BigInt(1), BigInt(4));
    std::vector<Rational> point{quarter, quarter};
    std::vector<Rational> lambdas = barycentric_at(lagrange, point);
    CHECK(lambdas[0] == quarter);
    CHECK(lambdas[1] == quarter);
    CHECK(lambdas[2] == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("partition of unity and reproduction of the point, random rational x") {
    auto rng = test_rng(4);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t n = 1 + iter % 5;
        Matrix01 m = random_nonsingular_01(n, rng);
        NodeMatrix node = border_01(m);
        LagrangeData lagrange = lagrange_data(node);
        std::vector<Rational> x = random_rational_point(n, rng);
        std::vector<Rational> lambdas = barycentric_at(lagrange, x);

        Rational total;
        std::vector<Rational> reconstructed(n);
        for (std::size_t j = 0; j <= n; ++j) {
            total += lambdas[j];
            std::vector<Rational> vertex = node.vertex(j);
            for (std::size_t i = 0; i < n; ++i) reconstructed[i] += lambdas[j] * vertex[i];
        }
        REQUIRE(total == Rational(1));
        REQUIRE(reconstructed == x);
    }
}

TEST_CASE("centroid lies inside") {
    auto rng = test_rng(5);
    for (int iter = 0; iter < 25; ++iter) {
        std::size_t n = 1 + iter % 4;
        Matrix01 m = random_nonsingular_01(n, rng);
        NodeMatrix node = border_01(m);
        LagrangeData lagrange = lagrange_data(node);
        std::vector<Rational> centroid(n);
        for (std::size_t j = 0; j <= n; ++j) {
            std::vector<Rational> vertex = node.vertex(j);
            for (std::size_t i = 0; i < n; ++i) centroid[i] += vertex[i];
        }
        Rational scale = Rational(1) / Rational(static_cast<long long>(n + 1));
        for (Rational& c : centroid) c *= scale;
        REQUIRE(simplex_contains(lagrange, centroid));
    }
}

TEST_CASE("barycentric_at rejects points of the wrong dimension") {
    LagrangeData lagrange = lagrange_data(border_01(identity01(2)));
    std::vector<Rational> bad{Rational(0)};
    CHECK_THROWS_AS(barycentric_at(lagrange, bad), DimensionMismatch);
}
