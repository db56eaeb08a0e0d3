#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "detcert/bigint.hpp"

namespace detcert {

// Exact fraction, always reduced to lowest terms with positive denominator.
// Zero is canonically 0/1. Equality is therefore structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT
    Rational(BigInt numerator, BigInt denominator);

    // Accepts "p/q" or "p" with optional sign, e.g. "-3/7", "1438/711", "2".
    static Rational from_string(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_negative() const noexcept { return num_.is_negative(); }
    bool is_integer() const noexcept { return den_ == BigInt(1); }
    int signum() const noexcept { return num_.signum(); }

    Rational abs() const;
    Rational reciprocal() const;  // throws std::domain_error on zero

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(Rational value) {
        value.num_.negate();
        return value;
    }

    bool operator==(const Rational& rhs) const noexcept {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    std::strong_ordering operator<=>(const Rational& rhs) const;

    // "p/q" for non-integers, plain "p" otherwise.
    std::string to_string() const;

    // Fixed-point decimal with the given number of fractional places,
    // rounded half to even (banker's rounding).
    std::string to_decimal_string(unsigned places) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

Rational abs(const Rational& value);

}  // namespace detcert
