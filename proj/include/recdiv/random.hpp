#pragma once

#include <cstdint>

#include "recdiv/digits.hpp"

namespace recdiv {

/// Deterministic 64-bit linear congruential generator so surveys and bench
/// runs reproduce bit-for-bit across implementations. The recurrence is
///
///     state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
///
/// (Knuth's MMIX constants). The initial state is the seed, the state is
/// advanced before every draw, and a draw in [0, bound) is
/// floor(state / 2^64 * bound).
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return state_;
    }

    /// Uniform draw in [0, bound) for bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

/// A value with exactly digit_count digits: the leading digit is drawn from
/// 1..9, the rest from 0..9, most significant first.
inline DigitString random_digit_string(Lcg64& rng, std::size_t digit_count) {
    if (digit_count == 0) {
        throw Error("digit count must be at least 1");
    }
    std::vector<std::uint8_t> digits(digit_count);
    digits[digit_count - 1] = static_cast<std::uint8_t>(1 + rng.next_below(9));
    for (std::size_t i = digit_count - 1; i-- > 0;) {
        digits[i] = static_cast<std::uint8_t>(rng.next_below(10));
    }
    return DigitString::from_digits(std::move(digits));
}

}  // namespace recdiv
