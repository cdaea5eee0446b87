#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "recdiv/errors.hpp"

namespace recdiv {

inline constexpr std::uint64_t kModulusLimit = 1ull << 63;       // exclusive
inline constexpr unsigned kChunkLimit = 18;                      // inclusive
inline constexpr std::uint64_t kScanLimit = 1'000'000;           // brute-force modulus bound
inline constexpr std::uint64_t kSieveLimit = 100'000'000;        // primes_up_to bound

/// Validated modulus: 1 <= value < 2^63, so congruence arithmetic on t and k
/// fits double-width machine integers.
class Modulus {
public:
    explicit Modulus(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }
    unsigned unit_digit() const noexcept { return static_cast<unsigned>(value_ % 10); }
    bool coprime_to_ten() const noexcept { return value_ % 2 != 0 && value_ % 5 != 0; }
    std::size_t decimal_digits() const noexcept;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    std::uint64_t value_;
};

enum class ModulusClass { Two, Five, CoprimeToTen, Trivial, Unsupported };

ModulusClass classify(Modulus m);
std::string_view to_string(ModulusClass c);

/// Witness multiplier for a reduction chain: 10^chunk * t + 1 ≡ 0 (mod modulus).
/// For chunk 1 the cofactor k satisfies 10*t + 1 = k * modulus exactly, with
/// 1 <= k <= 9 and unit digit of k * modulus equal to 1.
///
/// The constructor checks every invariant: the congruence certificate, the
/// range 1 <= t <= modulus - 1, coprimality, the chunk bound, and (for
/// chunk 1) the cofactor identities.
class Multiplier {
public:
    Multiplier(Modulus modulus, unsigned chunk, std::uint64_t t);

    Modulus modulus() const noexcept { return modulus_; }
    unsigned chunk() const noexcept { return chunk_; }
    std::uint64_t t() const noexcept { return t_; }
    /// Cofactor k; present only for chunk 1.
    std::optional<std::uint64_t> cofactor() const noexcept { return k_; }

private:
    Modulus modulus_;
    unsigned chunk_;
    std::uint64_t t_;
    std::optional<std::uint64_t> k_;
};

/// Witness by the four-case closed form selected on the unit digit of m.
/// Stated for primes; accepted for any m >= 3 coprime to 10 (the algebra only
/// needs ud(m) in {1,3,7,9}) and cross-checked against inverse_t in tests.
Multiplier closed_form_t(Modulus m);

/// Witness via extended Euclid: t = (-(10^chunk)^-1) mod m.
Multiplier inverse_t(Modulus m, unsigned chunk);

struct BruteForceResult {
    Multiplier multiplier;
    std::uint64_t solution_count;  // must be 1: the congruence has a unique solution
};

/// Scans t in [0, m) for 10^chunk * t + 1 ≡ 0 (mod m); the uniqueness oracle.
BruteForceResult brute_force_t(Modulus m, unsigned chunk);

/// All primes <= limit, ascending (plain sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace recdiv
