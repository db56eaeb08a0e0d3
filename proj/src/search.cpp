#include "detcert/search.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <thread>

#include "detcert/errors.hpp"
#include "detcert/linalg.hpp"

namespace detcert {

namespace {

constexpr std::size_t kMaxSmallOrder = 12;
constexpr unsigned kDefaultBudget01 = 5;
constexpr unsigned kDefaultBudgetPM1 = 6;

// In-place Bareiss over machine words. Intermediate values are minors of the
// input, bounded by Hadamard's inequality; for |entries| <= 1 and order <= 12
// they stay far below 2^63.
std::int64_t det_small(std::array<std::int64_t, kMaxSmallOrder * kMaxSmallOrder>& a,
                       std::size_t n) {
    std::int64_t prev = 1;
    std::int64_t sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && a[pivot_row * n + k] == 0) ++pivot_row;
        if (pivot_row == n) return 0;
        if (pivot_row != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(a[pivot_row * n + j], a[k * n + j]);
            sign = -sign;
        }
        const std::int64_t pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const std::int64_t lead = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (pivot * a[i * n + j] - lead * a[k * n + j]) / prev;
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    return sign * a[(n - 1) * n + (n - 1)];
}

struct Partial {
    std::int64_t max_abs = -1;
    std::uint64_t count = 0;
    std::uint64_t witness_code = 0;
};

void merge_into(Partial& acc, const Partial& other) {
    if (other.max_abs > acc.max_abs) {
        acc = other;
    } else if (other.max_abs == acc.max_abs) {
        acc.count += other.count;
        if (other.witness_code < acc.witness_code) acc.witness_code = other.witness_code;
    }
}

// Scans codes [begin, end); fill_matrix materializes a code into the Bareiss
// buffer and returns the matrix order.
template <typename Fill>
Partial scan_codes(std::uint64_t begin, std::uint64_t end, std::size_t order, Fill fill_matrix) {
    std::array<std::int64_t, kMaxSmallOrder * kMaxSmallOrder> buffer{};
    Partial best;
    for (std::uint64_t code = begin; code < end; ++code) {
        fill_matrix(code, buffer);
        std::int64_t det = det_small(buffer, order);
        if (det < 0) det = -det;
        if (det > best.max_abs) {
            best.max_abs = det;
            best.count = 1;
            best.witness_code = code;
        } else if (det == best.max_abs) {
            ++best.count;
        }
    }
    return best;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? hc : 1;
}

template <typename Fill>
Partial parallel_scan(std::uint64_t space, std::size_t order, unsigned workers,
                      Fill fill_matrix) {
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, space > 0 ? space : 1));
    if (workers <= 1) return scan_codes(0, space, order, fill_matrix);

    std::vector<Partial> partials(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = space / workers;
    const std::uint64_t leftover = space % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < leftover ? 1 : 0);
        threads.emplace_back([&partials, w, begin, end, order, fill_matrix] {
            partials[w] = scan_codes(begin, end, order, fill_matrix);
        });
        begin = end;
    }
    for (std::thread& t : threads) t.join();

    Partial best;
    best.witness_code = ~std::uint64_t(0);
    for (const Partial& p : partials) merge_into(best, p);
    return best;
}

void check_budget(std::size_t n, unsigned budget, unsigned fallback, std::size_t max_bits,
                  const char* kind) {
    const unsigned effective = budget > 0 ? budget : fallback;
    if (n == 0) throw DimensionMismatch("order must be >= 1");
    if (n > effective)
        throw OrderTooLarge(std::string(kind) + " search: order " + std::to_string(n) +
                            " exceeds the budget of " + std::to_string(effective));
    if (max_bits > 62)
        throw OrderTooLarge(std::string(kind) + " search: enumeration space exceeds 2^62");
}

void fill_01(std::uint64_t code, std::size_t n,
             std::array<std::int64_t, kMaxSmallOrder * kMaxSmallOrder>& buffer) {
    const std::size_t bits = n * n;
    for (std::size_t i = 0; i < bits; ++i)
        buffer[i] = static_cast<std::int64_t>((code >> (bits - 1 - i)) & 1u);
}

// Interior code for the normalized +/-1 matrix: first row and column fixed
// to +1; bit 1 -> +1, bit 0 -> -1, row-major over the (n-1)^2 interior.
MatrixPM1 pm1_from_interior_code(std::size_t n, std::uint64_t code) {
    MatrixPM1 m(n);  // all +1
    const std::size_t inner = n - 1;
    const std::size_t bits = inner * inner;
    for (std::size_t i = 0; i < inner; ++i)
        for (std::size_t j = 0; j < inner; ++j) {
            const std::size_t bit = bits - 1 - (i * inner + j);
            m.set(i + 1, j + 1, ((code >> bit) & 1u) ? 1 : -1);
        }
    return m;
}

void fill_pm1_interior(std::uint64_t code, std::size_t n,
                       std::array<std::int64_t, kMaxSmallOrder * kMaxSmallOrder>& buffer) {
    for (std::size_t j = 0; j < n; ++j) buffer[j] = 1;
    const std::size_t inner = n - 1;
    const std::size_t bits = inner * inner;
    for (std::size_t i = 1; i < n; ++i) {
        buffer[i * n] = 1;
        for (std::size_t j = 1; j < n; ++j) {
            const std::size_t bit = bits - 1 - ((i - 1) * inner + (j - 1));
            buffer[i * n + j] = ((code >> bit) & 1u) ? 1 : -1;
        }
    }
}

BigInt factorial(std::size_t n) {
    BigInt result(1);
    for (std::size_t i = 2; i <= n; ++i) result *= BigInt(static_cast<long long>(i));
    return result;
}

}  // namespace

SearchResult01 brute_force_h(std::size_t n, const SearchOptions& options) {
    check_budget(n, options.budget, kDefaultBudget01, n * n, "0/1");
    const std::uint64_t space = std::uint64_t(1) << (n * n);
    Partial best = parallel_scan(space, n, resolve_workers(options.workers),
                                 [n](std::uint64_t code, auto& buffer) { fill_01(code, n, buffer); });

    SearchResult01 result;
    result.order = n;
    result.witness = Matrix01::from_code(n, best.witness_code);
    result.count_maximizers = best.count;
    result.max_abs_det = det_exact(result.witness.to_int_matrix()).abs();
    if (result.max_abs_det != BigInt(best.max_abs))
        throw InternalError("machine-word determinant disagrees with det_exact on the witness");
    return result;
}

SearchResultPM1 brute_force_g(std::size_t n, const SearchOptions& options) {
    check_budget(n, options.budget, kDefaultBudgetPM1, (n - 1) * (n - 1), "+/-1");
    const std::size_t inner_bits = (n - 1) * (n - 1);
    const std::uint64_t space = std::uint64_t(1) << inner_bits;
    Partial best = parallel_scan(space, n, resolve_workers(options.workers),
                                 [n](std::uint64_t code, auto& buffer) {
                                     fill_pm1_interior(code, n, buffer);
                                 });

    SearchResultPM1 result;
    result.order = n;
    result.witness = pm1_from_interior_code(n, best.witness_code);
    result.count_maximizers = best.count;
    result.max_abs_det = det_exact(result.witness.to_int_matrix()).abs();
    if (result.max_abs_det != BigInt(best.max_abs))
        throw InternalError("machine-word determinant disagrees with det_exact on the witness");
    return result;
}

std::vector<std::uint64_t> h_maximizer_codes(std::size_t n, const SearchOptions& options) {
    check_budget(n, options.budget, kDefaultBudget01, n * n, "0/1");
    std::array<std::int64_t, kMaxSmallOrder * kMaxSmallOrder> buffer{};
    std::vector<std::uint64_t> codes;
    std::int64_t max_abs = -1;
    const std::uint64_t space = std::uint64_t(1) << (n * n);
    for (std::uint64_t code = 0; code < space; ++code) {
        fill_01(code, n, buffer);
        std::int64_t det = det_small(buffer, n);
        if (det < 0) det = -det;
        if (det > max_abs) {
            max_abs = det;
            codes.clear();
            codes.push_back(code);
        } else if (det == max_abs) {
            codes.push_back(code);
        }
    }
    BigInt verified = det_exact(Matrix01::from_code(n, codes.front()).to_int_matrix()).abs();
    if (verified != BigInt(max_abs))
        throw InternalError("machine-word determinant disagrees with det_exact on the witness");
    return codes;
}

SimplexFromMaxdet simplex_from_maxdet(const Matrix01& m) {
    BigInt det = det_exact(m.to_int_matrix());
    if (det.is_zero()) throw SingularMatrix("matrix is singular; simplex would be degenerate");
    const std::size_t n = m.order();
    SimplexFromMaxdet result;
    result.vertices.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> vertex(n);
        for (std::size_t j = 0; j < n; ++j) vertex[j] = Rational(m.at(i, j));
        result.vertices.push_back(std::move(vertex));
    }
    result.vertices.emplace_back(n);  // origin
    result.volume = Rational(det.abs(), factorial(n));
    return result;
}

}  // namespace detcert
