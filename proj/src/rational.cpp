#include "detcert/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace detcert {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_.negate();
        den_.negate();
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_string(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(text));
    return Rational(BigInt::from_string(text.substr(0, slash)),
                    BigInt::from_string(text.substr(slash + 1)));
}

Rational Rational::abs() const {
    Rational result = *this;
    if (result.num_.is_negative()) result.num_.negate();
    return result;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    // denominators are positive, so cross-multiplication preserves order
    return num_ * rhs.den_ <=> rhs.num_ * den_;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal_string(unsigned places) const {
    BigInt p = num_.abs();
    const BigInt& q = den_;

    BigInt scale(1);
    for (unsigned i = 0; i < places; ++i) scale *= BigInt(10);

    BigInt scaled_quot, rem;
    BigInt::divmod(p * scale, q, scaled_quot, rem);

    // round half to even on the true remainder
    BigInt twice_rem = rem + rem;
    if (twice_rem > q || (twice_rem == q && scaled_quot.is_odd())) scaled_quot += BigInt(1);

    BigInt int_part, frac_part;
    BigInt::divmod(scaled_quot, scale, int_part, frac_part);

    std::string frac_digits = frac_part.to_string();
    if (frac_digits.size() < places)
        frac_digits.insert(0, places - frac_digits.size(), '0');

    std::string result;
    if (is_negative() && !scaled_quot.is_zero()) result += '-';
    result += int_part.to_string();
    if (places > 0) {
        result += '.';
        result += frac_digits;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

Rational abs(const Rational& value) { return value.abs(); }

}  // namespace detcert
