#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detcert/certify.hpp"
#include "detcert/errors.hpp"
#include "detcert/search.hpp"
#include "detcert/transform.hpp"
#include "oracles.hpp"

using namespace detcert;
using namespace detcert::testing;

TEST_CASE("brute_force_h small orders") {
    const long long expected[] = {0, 1, 1, 2, 3};  // h_1..h_4
    for (std::size_t n = 1; n <= 4; ++n) {
        SearchResult01 result = brute_force_h(n);
        CAPTURE(n);
        REQUIRE(result.max_abs_det == BigInt(expected[n]));
        REQUIRE(result.order == n);
        // witness really attains the maximum
        REQUIRE(det_exact(result.witness.to_int_matrix()).abs() == result.max_abs_det);
    }
}

TEST_CASE("brute_force_g small orders and the doubling relation") {
    REQUIRE(brute_force_g(1).max_abs_det == BigInt(1));
    REQUIRE(brute_force_g(2).max_abs_det == BigInt(2));
    REQUIRE(brute_force_g(3).max_abs_det == BigInt(4));
    REQUIRE(brute_force_g(4).max_abs_det == BigInt(16));
    REQUIRE(brute_force_g(5).max_abs_det == BigInt(48));

    // g_{n+1} = 2^n h_n
    for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        REQUIRE(brute_force_g(n + 1).max_abs_det ==
                BigInt::power_of_two(static_cast<unsigned>(n)) * brute_force_h(n).max_abs_det);
    }
}

TEST_CASE("results are identical for any worker count") {
    for (std::size_t n = 2; n <= 4; ++n) {
        SearchResult01 single = brute_force_h(n, {.workers = 1});
        for (unsigned workers : {2u, 3u, 8u}) {
            SearchResult01 multi = brute_force_h(n, {.workers = workers});
            CAPTURE(n);
            CAPTURE(workers);
            REQUIRE(multi.max_abs_det == single.max_abs_det);
            REQUIRE(multi.witness == single.witness);
            REQUIRE(multi.count_maximizers == single.count_maximizers);
        }
    }
    SearchResultPM1 g1 = brute_force_g(4, {.workers = 1});
    SearchResultPM1 g8 = brute_force_g(4, {.workers = 8});
    REQUIRE(g1.max_abs_det == g8.max_abs_det);
    REQUIRE(g1.witness == g8.witness);
    REQUIRE(g1.count_maximizers == g8.count_maximizers);
}

TEST_CASE("witness is the lexicographically smallest maximizer") {
    for (std::size_t n = 2; n <= 3; ++n) {
        SearchResult01 result = brute_force_h(n, {.workers = 3});
        std::vector<std::uint64_t> codes = h_maximizer_codes(n);
        CAPTURE(n);
        REQUIRE(result.witness.to_code() == codes.front());
        REQUIRE(result.count_maximizers == codes.size());
        for (std::uint64_t code : codes)
            REQUIRE(det_exact(Matrix01::from_code(n, code).to_int_matrix()).abs() ==
                    result.max_abs_det);
    }
}

TEST_CASE("order budget") {
    CHECK_THROWS_AS(brute_force_h(6), OrderTooLarge);
    CHECK_THROWS_AS(brute_force_h(0), DimensionMismatch);
    CHECK_THROWS_AS(brute_force_g(7), OrderTooLarge);
    CHECK_THROWS_AS(brute_force_g(9, SearchOptions{.workers = 1, .budget = 9}), OrderTooLarge);
    // raising the budget unlocks the order (order 6 itself is too slow to run here)
    CHECK_NOTHROW(brute_force_h(3, SearchOptions{.workers = 1, .budget = 3}));
    CHECK_THROWS_AS(brute_force_h(4, SearchOptions{.workers = 1, .budget = 3}), OrderTooLarge);
}

TEST_CASE("every small-order maximizer satisfies the row-sum condition") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t code : h_maximizer_codes(n)) {
            Verdict verdict = certify_01(Matrix01::from_code(n, code));
            CAPTURE(n);
            CAPTURE(code);
            REQUIRE(verdict.kind == VerdictKind::NecessaryConditionHolds);
            for (const Rational& s : verdict.sums.sums) REQUIRE(s == Rational(2));
        }
    }
}

TEST_CASE("g at the mandatory budget: g_6 = 160 = 2^5 h_5") {
    SearchResultPM1 g6 = brute_force_g(6);
    CHECK(g6.max_abs_det == BigInt(160));
    CHECK(det_exact(g6.witness.to_int_matrix()).abs() == BigInt(160));
}

TEST_CASE("every normalized g maximizer transforms to an h maximizer") {
    const long long h[] = {0, 1, 1, 2, 3};
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::size_t inner = n;  // order n+1, interior n x n
        const std::uint64_t space = std::uint64_t(1) << (inner * inner);
        BigInt best;
        std::vector<MatrixPM1> maximizers;
        for (std::uint64_t code = 0; code < space; ++code) {
            MatrixPM1 u(n + 1);  // all +1, interior from the code
            for (std::size_t i = 0; i < inner; ++i)
                for (std::size_t j = 0; j < inner; ++j) {
                    std::size_t bit = inner * inner - 1 - (i * inner + j);
                    u.set(i + 1, j + 1, ((code >> bit) & 1u) ? 1 : -1);
                }
            BigInt d = det_exact(u.to_int_matrix()).abs();
            if (d > best) {
                best = d;
                maximizers.clear();
            }
            if (d == best) maximizers.push_back(std::move(u));
        }
        CAPTURE(n);
        REQUIRE(best == brute_force_g(n + 1).max_abs_det);
        for (const MatrixPM1& u : maximizers)
            REQUIRE(det_exact(pm1_to_01(u).to_int_matrix()).abs() == BigInt(h[n]));
    }
}

TEST_CASE("simplex_from_maxdet") {
    SimplexFromMaxdet unit = simplex_from_maxdet(matrix01_from({{1}}));
    CHECK(unit.vertices ==
          std::vector<std::vector<Rational>>{{Rational(1)}, {Rational(0)}});
    CHECK(unit.volume == Rational(1));

    SimplexFromMaxdet circulant =
        simplex_from_maxdet(matrix01_from({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(circulant.volume == Rational(BigInt(1), BigInt(3)));  // 2/3! = nu_3
    CHECK(circulant.vertices.size() == 4);
    CHECK(circulant.vertices.back() == std::vector<Rational>(3));

    SimplexFromMaxdet corner2 = simplex_from_maxdet(matrix01_from({{1, 0}, {0, 1}}));
    CHECK(corner2.volume == Rational(BigInt(1), BigInt(2)));  // nu_2

    CHECK_THROWS_AS(simplex_from_maxdet(matrix01_from({{1, 1}, {1, 1}})), SingularMatrix);
}
