#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace detcert {

// Arbitrary-precision signed integer, sign + magnitude over 32-bit limbs
// (little-endian, no trailing zero limbs). Zero is canonical: empty limb
// vector, non-negative sign. All operations are exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT(google-explicit-constructor)

    // Accepts an optional leading '+'/'-' followed by decimal digits.
    static BigInt from_string(std::string_view text);
    static BigInt power_of_two(unsigned exponent);

    bool is_zero() const noexcept { return limbs_.empty(); }
    bool is_negative() const noexcept { return negative_; }
    bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1u); }
    int signum() const noexcept { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt abs() const;
    BigInt& negate() noexcept;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
    friend BigInt operator/(const BigInt& lhs, const BigInt& rhs);
    friend BigInt operator%(const BigInt& lhs, const BigInt& rhs);
    friend BigInt operator-(BigInt value) {
        value.negate();
        return value;
    }

    // Truncated division: quotient rounds toward zero, remainder carries the
    // sign of the dividend, |remainder| < |divisor|. Throws std::domain_error
    // on zero divisor.
    static void divmod(const BigInt& dividend, const BigInt& divisor, BigInt& quotient,
                       BigInt& remainder);

    // Non-negative gcd; gcd(0, 0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt lcm(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& rhs) const noexcept {
        return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
    }
    std::strong_ordering operator<=>(const BigInt& rhs) const noexcept;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& value);

private:
    using Limbs = std::vector<std::uint32_t>;

    static int compare_magnitudes(const Limbs& a, const Limbs& b) noexcept;
    static void add_magnitudes(Limbs& acc, const Limbs& addend);
    static void sub_magnitudes(Limbs& acc, const Limbs& subtrahend);  // acc >= subtrahend
    static Limbs mul_magnitudes(const Limbs& a, const Limbs& b);
    static void divmod_magnitudes(const Limbs& dividend, const Limbs& divisor, Limbs& quotient,
                                  Limbs& remainder);
    static Limbs shift_left_bits(const Limbs& limbs, unsigned bits);     // bits < 32
    static Limbs shift_right_bits(const Limbs& limbs, unsigned bits);    // bits < 32
    static void trim(Limbs& limbs) noexcept;

    void add_signed(const Limbs& limbs, bool negative);

    Limbs limbs_;
    bool negative_ = false;
};

}  // namespace detcert
