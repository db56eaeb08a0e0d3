#pragma once

#include <cstdint>
#include <vector>

#include "detcert/binary_matrix.hpp"
#include "detcert/rational.hpp"

namespace detcert {

struct SearchOptions {
    unsigned workers = 0;  // 0: hardware concurrency
    unsigned budget = 0;   // 0: default per kind (0/1: order 5, +/-1: order 6)
};

// Exhaustive maximum of |det| over all 2^(n^2) 0/1 matrices of order n.
// The witness is the maximizer with the smallest row-major bit string; the
// count covers the whole space. Deterministic for any worker count.
struct SearchResult01 {
    std::size_t order = 0;
    BigInt max_abs_det;
    Matrix01 witness;
    std::uint64_t count_maximizers = 0;
};

// Exhaustive maximum of |det| over +/-1 matrices of order n, computed by
// fixing the first row and column to all 1's (sign normalization preserves
// |det|) and enumerating the 2^((n-1)^2) interior matrices. Witness and
// count refer to that normalized space.
struct SearchResultPM1 {
    std::size_t order = 0;
    BigInt max_abs_det;
    MatrixPM1 witness;
    std::uint64_t count_maximizers = 0;
};

// Throw OrderTooLarge beyond the budget. The hot loop evaluates determinants
// in machine words; the reported maximum and witness are re-verified with
// det_exact before returning.
SearchResult01 brute_force_h(std::size_t n, const SearchOptions& options = {});
SearchResultPM1 brute_force_g(std::size_t n, const SearchOptions& options = {});

// Every 0/1 maximizer of order n, as codes in ascending order. Same budget
// rules as brute_force_h.
std::vector<std::uint64_t> h_maximizer_codes(std::size_t n, const SearchOptions& options = {});

// Maximum-volume simplex construction: vertices are the rows of m plus the
// origin; volume = |det(m)| / n!. Throws SingularMatrix when det = 0.
struct SimplexFromMaxdet {
    std::vector<std::vector<Rational>> vertices;
    Rational volume;
};

SimplexFromMaxdet simplex_from_maxdet(const Matrix01& m);

}  // namespace detcert
