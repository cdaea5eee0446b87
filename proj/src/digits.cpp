#include "recdiv/digits.hpp"

#include <algorithm>
#include <cctype>

namespace recdiv {

namespace {

void strip_leading_zeros(std::vector<std::uint8_t>& lsd_first) {
    while (lsd_first.size() > 1 && lsd_first.back() == 0) {
        lsd_first.pop_back();
    }
}

}  // namespace

DigitString DigitString::from_digits(std::vector<std::uint8_t> lsd_first) {
    if (lsd_first.empty()) {
        lsd_first.push_back(0);
    }
    for (std::uint8_t d : lsd_first) {
        if (d > 9) {
            throw Error("digit value " + std::to_string(d) + " out of range 0..9");
        }
    }
    strip_leading_zeros(lsd_first);
    return DigitString(canonical_tag{}, std::move(lsd_first));
}

DigitString DigitString::from_u64(std::uint64_t value) {
    std::vector<std::uint8_t> digits;
    do {
        digits.push_back(static_cast<std::uint8_t>(value % 10));
        value /= 10;
    } while (value != 0);
    return DigitString(canonical_tag{}, std::move(digits));
}

DigitString parse_decimal(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) {
        throw EmptyInput();
    }
    std::vector<std::uint8_t> digits;
    digits.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') {
            throw NonDigitCharacter(c, i);
        }
        digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    std::reverse(digits.begin(), digits.end());
    return DigitString::from_digits(std::move(digits));
}

std::string to_text(const DigitString& n) {
    std::string out;
    out.reserve(n.size());
    for (auto it = n.digits().rbegin(); it != n.digits().rend(); ++it) {
        out.push_back(static_cast<char>('0' + *it));
    }
    return out;
}

std::string to_text(const SignedValue& v) {
    std::string out = to_text(v.magnitude);
    if (v.is_negative()) {
        out.insert(out.begin(), '-');
    }
    return out;
}

std::pair<DigitString, std::uint64_t> split_tail(const DigitString& n, unsigned chunk) {
    if (chunk == 0) {
        throw ChunkZero();
    }
    if (chunk > 19) {  // 10^19 < 2^64 <= 10^20
        throw ChunkOutOfRange(chunk, 19);
    }
    const auto& digits = n.digits();
    std::uint64_t tail = 0;
    std::uint64_t place = 1;
    const std::size_t take = std::min<std::size_t>(chunk, digits.size());
    for (std::size_t i = 0; i < take; ++i) {
        tail += digits[i] * place;
        place *= 10;
    }
    if (digits.size() <= chunk) {
        return {DigitString(), tail};
    }
    std::vector<std::uint8_t> quotient(digits.begin() + chunk, digits.end());
    return {DigitString::from_digits(std::move(quotient)), tail};
}

std::size_t digit_count(const DigitString& n) {
    return n.size();
}

DigitString mul_small(const DigitString& n, std::uint64_t c) {
    if (c == 0 || n.is_zero()) {
        return DigitString();
    }
    std::vector<std::uint8_t> out;
    out.reserve(n.size() + 20);
    unsigned __int128 carry = 0;
    for (std::uint8_t d : n.digits()) {
        const unsigned __int128 cur = static_cast<unsigned __int128>(d) * c + carry;
        out.push_back(static_cast<std::uint8_t>(cur % 10));
        carry = cur / 10;
    }
    while (carry != 0) {
        out.push_back(static_cast<std::uint8_t>(carry % 10));
        carry /= 10;
    }
    return DigitString::from_digits(std::move(out));
}

SignedValue sub_signed(const DigitString& a, const DigitString& b) {
    const auto order = compare(a, b);
    if (order == std::strong_ordering::equal) {
        return SignedValue();
    }
    const DigitString& big = order == std::strong_ordering::greater ? a : b;
    const DigitString& small = order == std::strong_ordering::greater ? b : a;
    std::vector<std::uint8_t> out;
    out.reserve(big.size());
    int borrow = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        int cur = static_cast<int>(big.digits()[i]) - borrow -
                  (i < small.size() ? static_cast<int>(small.digits()[i]) : 0);
        if (cur < 0) {
            cur += 10;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint8_t>(cur));
    }
    const Sign sign = order == std::strong_ordering::greater ? Sign::positive : Sign::negative;
    return SignedValue(sign, DigitString::from_digits(std::move(out)));
}

std::strong_ordering compare(const DigitString& a, const DigitString& b) {
    if (a.size() != b.size()) {
        return a.size() <=> b.size();
    }
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a.digits()[i] != b.digits()[i]) {
            return a.digits()[i] <=> b.digits()[i];
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace recdiv
