#include "detcert/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace detcert {

namespace {
constexpr std::uint64_t kLimbBase = std::uint64_t(1) << 32;
constexpr std::uint32_t kDecChunkDigits = 9;
constexpr std::uint32_t kDecChunkBase = 1000000000u;  // 10^9 < 2^32
}  // namespace

BigInt::BigInt(long long value) {
    if (value == 0) return;
    negative_ = value < 0;
    // two's-complement-safe magnitude of LLONG_MIN
    std::uint64_t magnitude =
        negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
    limbs_.push_back(static_cast<std::uint32_t>(magnitude));
    if (magnitude >> 32) limbs_.push_back(static_cast<std::uint32_t>(magnitude >> 32));
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: empty numeral");

    BigInt result;
    while (pos < text.size()) {
        std::uint32_t chunk = 0;
        std::uint32_t chunk_scale = 1;
        for (std::uint32_t i = 0; i < kDecChunkDigits && pos < text.size(); ++i, ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid digit");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            chunk_scale *= 10;
        }
        // result = result * chunk_scale + chunk
        std::uint64_t carry = chunk;
        for (std::uint32_t& limb : result.limbs_) {
            std::uint64_t cur = std::uint64_t(limb) * chunk_scale + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) result.limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    trim(result.limbs_);
    result.negative_ = negative && !result.limbs_.empty();
    return result;
}

BigInt BigInt::power_of_two(unsigned exponent) {
    BigInt result;
    result.limbs_.assign(exponent / 32 + 1, 0);
    result.limbs_.back() = std::uint32_t(1) << (exponent % 32);
    return result;
}

BigInt BigInt::abs() const {
    BigInt result = *this;
    result.negative_ = false;
    return result;
}

BigInt& BigInt::negate() noexcept {
    if (!limbs_.empty()) negative_ = !negative_;
    return *this;
}

void BigInt::trim(Limbs& limbs) noexcept {
    while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

int BigInt::compare_magnitudes(const Limbs& a, const Limbs& b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_magnitudes(Limbs& acc, const Limbs& addend) {
    if (acc.size() < addend.size()) acc.resize(addend.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint64_t cur = carry + acc[i] + (i < addend.size() ? addend[i] : 0);
        acc[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
        if (carry == 0 && i >= addend.size()) break;
    }
    if (carry) acc.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_magnitudes(Limbs& acc, const Limbs& subtrahend) {
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) {
        std::uint64_t sub = borrow + (i < subtrahend.size() ? subtrahend[i] : 0);
        if (sub == 0 && i >= subtrahend.size()) break;
        std::uint64_t cur = std::uint64_t(acc[i]) - sub;
        acc[i] = static_cast<std::uint32_t>(cur);
        borrow = (cur >> 32) ? 1 : 0;
    }
    trim(acc);
}

BigInt::Limbs BigInt::mul_magnitudes(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty()) return {};
    Limbs result(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = result[i + j] + ai * b[j] + carry;
            result[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        result[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    trim(result);
    return result;
}

BigInt::Limbs BigInt::shift_left_bits(const Limbs& limbs, unsigned bits) {
    if (bits == 0 || limbs.empty()) return limbs;
    Limbs result(limbs.size(), 0);
    std::uint32_t spill = 0;
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        result[i] = (limbs[i] << bits) | spill;
        spill = static_cast<std::uint32_t>(limbs[i] >> (32 - bits));
    }
    if (spill) result.push_back(spill);
    return result;
}

BigInt::Limbs BigInt::shift_right_bits(const Limbs& limbs, unsigned bits) {
    Limbs result;
    if (bits == 0) {
        result = limbs;
    } else {
        result.assign(limbs.size(), 0);
        for (std::size_t i = 0; i < limbs.size(); ++i) {
            result[i] = limbs[i] >> bits;
            if (i + 1 < limbs.size()) result[i] |= limbs[i + 1] << (32 - bits);
        }
    }
    trim(result);
    return result;
}

// Knuth algorithm D on 32-bit limbs with 64-bit intermediates.
void BigInt::divmod_magnitudes(const Limbs& dividend, const Limbs& divisor, Limbs& quotient,
                               Limbs& remainder) {
    quotient.clear();
    remainder.clear();
    if (compare_magnitudes(dividend, divisor) < 0) {
        remainder = dividend;
        return;
    }
    if (divisor.size() == 1) {
        std::uint64_t d = divisor[0];
        std::uint64_t rem = 0;
        quotient.assign(dividend.size(), 0);
        for (std::size_t i = dividend.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | dividend[i];
            quotient[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        trim(quotient);
        if (rem) remainder.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    const unsigned shift = static_cast<unsigned>(std::countl_zero(divisor.back()));
    Limbs vn = shift_left_bits(divisor, shift);
    Limbs un = shift_left_bits(dividend, shift);
    un.resize(dividend.size() + 1, 0);

    const std::size_t n = vn.size();
    const std::size_t m = un.size() - 1 - n;
    quotient.assign(m + 1, 0);

    const std::uint64_t vtop = vn[n - 1];
    const std::uint64_t vnext = vn[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t top = (std::uint64_t(un[j + n]) << 32) | un[j + n - 1];
        std::uint64_t qhat = top / vtop;
        std::uint64_t rhat = top % vtop;
        while (qhat >= kLimbBase || qhat * vnext > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kLimbBase) break;
        }

        // un[j .. j+n] -= qhat * vn
        std::uint64_t carry = 0;
        std::uint64_t borrow = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t product = qhat * vn[i] + carry;
            carry = product >> 32;
            std::uint64_t sub = (product & 0xffffffffu) + borrow;
            std::uint64_t cur = std::uint64_t(un[i + j]) - sub;
            un[i + j] = static_cast<std::uint32_t>(cur);
            borrow = (cur >> 32) ? 1 : 0;
        }
        std::uint64_t top_sub = carry + borrow;
        if (std::uint64_t(un[j + n]) < top_sub) {
            // qhat was one too large: add the divisor back
            un[j + n] = static_cast<std::uint32_t>(std::uint64_t(un[j + n]) - top_sub);
            --qhat;
            std::uint64_t c = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t cur = std::uint64_t(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<std::uint32_t>(cur);
                c = cur >> 32;
            }
            un[j + n] = static_cast<std::uint32_t>(un[j + n] + c);
        } else {
            un[j + n] = static_cast<std::uint32_t>(std::uint64_t(un[j + n]) - top_sub);
        }
        quotient[j] = static_cast<std::uint32_t>(qhat);
    }

    trim(quotient);
    un.resize(n);
    remainder = shift_right_bits(un, shift);
}

void BigInt::add_signed(const Limbs& limbs, bool negative) {
    if (negative_ == negative) {
        add_magnitudes(limbs_, limbs);
    } else {
        int cmp = compare_magnitudes(limbs_, limbs);
        if (cmp == 0) {
            limbs_.clear();
            negative_ = false;
        } else if (cmp > 0) {
            sub_magnitudes(limbs_, limbs);
        } else {
            Limbs tmp = limbs;
            sub_magnitudes(tmp, limbs_);
            limbs_ = std::move(tmp);
            negative_ = negative;
        }
    }
    if (limbs_.empty()) negative_ = false;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    add_signed(rhs.limbs_, rhs.negative_);
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    add_signed(rhs.limbs_, !rhs.negative_);
    return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt result;
    result.limbs_ = BigInt::mul_magnitudes(lhs.limbs_, rhs.limbs_);
    result.negative_ = !result.limbs_.empty() && (lhs.negative_ != rhs.negative_);
    return result;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

void BigInt::divmod(const BigInt& dividend, const BigInt& divisor, BigInt& quotient,
                    BigInt& remainder) {
    if (divisor.is_zero()) throw std::domain_error("BigInt: division by zero");
    Limbs q, r;
    divmod_magnitudes(dividend.limbs_, divisor.limbs_, q, r);
    quotient.limbs_ = std::move(q);
    quotient.negative_ = !quotient.limbs_.empty() && (dividend.negative_ != divisor.negative_);
    remainder.limbs_ = std::move(r);
    remainder.negative_ = !remainder.limbs_.empty() && dividend.negative_;
}

BigInt operator/(const BigInt& lhs, const BigInt& rhs) {
    BigInt q, r;
    BigInt::divmod(lhs, rhs, q, r);
    return q;
}

BigInt operator%(const BigInt& lhs, const BigInt& rhs) {
    BigInt q, r;
    BigInt::divmod(lhs, rhs, q, r);
    return r;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    *this = *this / rhs;
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    *this = *this % rhs;
    return *this;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    Limbs x = a.limbs_;
    Limbs y = b.limbs_;
    while (!y.empty()) {
        Limbs q, r;
        divmod_magnitudes(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    BigInt result;
    result.limbs_ = std::move(x);
    return result;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    BigInt g = gcd(a, b);
    return (a.abs() / g) * b.abs();
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const noexcept {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = compare_magnitudes(limbs_, rhs.limbs_);
    if (negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    Limbs value = limbs_;
    const Limbs chunk_base{kDecChunkBase};
    std::string digits;
    while (!value.empty()) {
        Limbs q, r;
        divmod_magnitudes(value, chunk_base, q, r);
        std::uint32_t chunk = r.empty() ? 0 : r[0];
        for (std::uint32_t i = 0; i < kDecChunkDigits; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        value = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace detcert
