#pragma once

#include <cstdint>
#include <optional>

#include "recdiv/digits.hpp"
#include "recdiv/multiplier.hpp"

namespace recdiv {

/// n mod m by most-significant-first Horner reduction, r <- (10r + digit) mod m.
/// Deliberately simple and independent of the reduction-chain code path.
std::uint64_t mod_direct(const DigitString& n, Modulus m);

/// Compares is_divisible against mod_direct for every n in 0..n_max.
/// Returns the first disagreeing n, or nothing if the routes agree everywhere.
std::optional<std::uint64_t> exhaustive_verdict_scan(Modulus m, unsigned chunk,
                                                     std::uint64_t n_max);

}  // namespace recdiv
