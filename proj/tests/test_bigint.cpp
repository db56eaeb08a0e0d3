#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detcert/bigint.hpp"

using detcert::BigInt;

namespace {

BigInt random_bigint(std::mt19937_64& rng, unsigned max_limbs) {
    std::uniform_int_distribution<unsigned> limb_count(0, max_limbs);
    unsigned limbs = limb_count(rng);
    BigInt value;
    for (unsigned i = 0; i < limbs; ++i) {
        value = value * BigInt(1LL << 32) + BigInt(static_cast<long long>(rng() & 0xffffffffu));
    }
    if (rng() & 1u) value.negate();
    return value;
}

}  // namespace

TEST_CASE("small arithmetic") {
    CHECK(BigInt(2) + BigInt(3) == BigInt(5));
    CHECK(BigInt(-2) + BigInt(3) == BigInt(1));
    CHECK(BigInt(2) - BigInt(3) == BigInt(-1));
    CHECK(BigInt(-4) * BigInt(-5) == BigInt(20));
    CHECK(BigInt(-4) * BigInt(5) == BigInt(-20));
    CHECK(BigInt(7) / BigInt(2) == BigInt(3));
    CHECK(BigInt(7) % BigInt(2) == BigInt(1));
    CHECK(BigInt(-7) / BigInt(2) == BigInt(-3));
    CHECK(BigInt(-7) % BigInt(2) == BigInt(-1));
    CHECK(BigInt(7) / BigInt(-2) == BigInt(-3));
    CHECK(BigInt(7) % BigInt(-2) == BigInt(1));
}

TEST_CASE("zero is canonical") {
    BigInt zero = BigInt(5) - BigInt(5);
    CHECK(zero.is_zero());
    CHECK(!zero.is_negative());
    CHECK(zero == BigInt(0));
    CHECK(zero == BigInt(-3) + BigInt(3));
    CHECK((-zero) == zero);
    CHECK(zero.to_string() == "0");
}

TEST_CASE("decimal round trip") {
    const char* samples[] = {
        "0",
        "1",
        "-1",
        "4294967295",
        "4294967296",
        "-340282366920938463463374607431768211456",
        "123456789012345678901234567890123456789012345678901234567890",
    };
    for (const char* s : samples) {
        CAPTURE(s);
        CHECK(BigInt::from_string(s).to_string() == s);
    }
    CHECK(BigInt::from_string("+42") == BigInt(42));
    CHECK(BigInt::from_string("0007") == BigInt(7));
    CHECK(BigInt::from_string("-0") == BigInt(0));
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x4"), std::invalid_argument);
}

TEST_CASE("long long extremes") {
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    CHECK(BigInt(lo).to_string() == std::to_string(lo));
    CHECK(BigInt(hi).to_string() == std::to_string(hi));
    CHECK(BigInt(lo) + BigInt(hi) == BigInt(-1));
}

TEST_CASE("divmod reconstruction property") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 20000; ++iter) {
        BigInt a = random_bigint(rng, 6);
        BigInt b = random_bigint(rng, 4);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());
        REQUIRE(q * b + r == a);
        REQUIRE(r.abs() < b.abs());
        if (!r.is_zero()) REQUIRE(r.is_negative() == a.is_negative());
    }
    BigInt q, r;
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0), q, r), std::domain_error);
}

TEST_CASE("multiplication against repeated addition") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        BigInt a = random_bigint(rng, 5);
        long long k = static_cast<long long>(rng() % 50);
        BigInt sum;
        for (long long i = 0; i < k; ++i) sum += a;
        CHECK(a * BigInt(k) == sum);
    }
}

TEST_CASE("ordering") {
    CHECK(BigInt(-10) < BigInt(-9));
    CHECK(BigInt(-1) < BigInt(0));
    CHECK(BigInt(0) < BigInt(1));
    CHECK(BigInt::from_string("4294967296") > BigInt::from_string("4294967295"));
    CHECK(BigInt::from_string("-4294967296") < BigInt::from_string("-4294967295"));
}

TEST_CASE("gcd and lcm") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
    CHECK(BigInt::lcm(BigInt(4), BigInt(6)) == BigInt(12));
    CHECK(BigInt::lcm(BigInt(0), BigInt(6)) == BigInt(0));

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a = random_bigint(rng, 3);
        BigInt b = random_bigint(rng, 3);
        BigInt g = BigInt::gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("power_of_two") {
    CHECK(BigInt::power_of_two(0) == BigInt(1));
    CHECK(BigInt::power_of_two(1) == BigInt(2));
    CHECK(BigInt::power_of_two(31) == BigInt(1LL << 31));
    CHECK(BigInt::power_of_two(32) == BigInt(1LL << 32));
    CHECK(BigInt::power_of_two(100).to_string() == "1267650600228229401496703205376");
}
