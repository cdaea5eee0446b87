#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recdiv/errors.hpp"

namespace recdiv {

/// Arbitrary-precision non-negative integer stored as base-10 digits,
/// least-significant first. Canonical form: every digit is in 0..9 and the
/// most-significant digit is nonzero, except that zero is the single digit 0.
class DigitString {
public:
    /// Canonical zero.
    DigitString() : digits_{0} {}

    /// Builds from least-significant-first digits; strips leading zeros and
    /// rejects out-of-range digit values.
    static DigitString from_digits(std::vector<std::uint8_t> lsd_first);

    static DigitString from_u64(std::uint64_t value);

    const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    std::uint8_t unit_digit() const noexcept { return digits_.front(); }
    bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    struct canonical_tag {};
    DigitString(canonical_tag, std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {}

    std::vector<std::uint8_t> digits_;
};

enum class Sign { positive, negative };

/// Sign plus magnitude. Canonical zero is positive.
struct SignedValue {
    Sign sign = Sign::positive;
    DigitString magnitude;

    SignedValue() = default;
    SignedValue(Sign s, DigitString mag)
        : sign(mag.is_zero() ? Sign::positive : s), magnitude(std::move(mag)) {}

    bool is_negative() const noexcept { return sign == Sign::negative; }
    bool is_zero() const noexcept { return magnitude.is_zero(); }
    /// True for zero or negative values.
    bool is_nonpositive() const noexcept { return is_zero() || is_negative(); }

    friend bool operator==(const SignedValue&, const SignedValue&) = default;
};

/// Parses a decimal natural number. Surrounding whitespace is ignored and
/// leading zeros are canonicalized away; signs are rejected.
DigitString parse_decimal(std::string_view text);

/// Decimal rendering without leading zeros; "0" for zero.
std::string to_text(const DigitString& n);

/// As above with a leading '-' for negative values.
std::string to_text(const SignedValue& v);

/// Splits n = quotient * 10^chunk + tail with 0 <= tail < 10^chunk.
/// chunk must be in [1, 19] so the tail fits a 64-bit value.
std::pair<DigitString, std::uint64_t> split_tail(const DigitString& n, unsigned chunk);

/// Number of digits in canonical form; digit_count(0) == 1.
std::size_t digit_count(const DigitString& n);

/// n * c for a machine-range scalar c.
DigitString mul_small(const DigitString& n, std::uint64_t c);

/// a - b with exact sign and magnitude.
SignedValue sub_signed(const DigitString& a, const DigitString& b);

/// Total order consistent with the integer values.
std::strong_ordering compare(const DigitString& a, const DigitString& b);

}  // namespace recdiv
