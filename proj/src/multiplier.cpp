#include "recdiv/multiplier.hpp"

#include <string>

namespace recdiv {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow10_mod(unsigned exponent, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (unsigned i = 0; i < exponent; ++i) {
        r = static_cast<std::uint64_t>(static_cast<u128>(r) * 10 % m);
    }
    return r;
}

// Inverse of a modulo m for gcd(a, m) = 1, result in [0, m).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    __int128 old_r = a, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        const __int128 tmp_r = old_r - q * r;
        old_r = r;
        r = tmp_r;
        const __int128 tmp_s = old_s - q * s;
        old_s = s;
        s = tmp_s;
    }
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) inv += m;
    return static_cast<std::uint64_t>(inv);
}

void require_coprime(Modulus m) {
    if (m.value() == 1) {
        throw TrivialModulus();
    }
    if (!m.coprime_to_ten()) {
        throw NotCoprimeToTen(m.value());
    }
}

void require_chunk(unsigned chunk) {
    if (chunk < 1 || chunk > kChunkLimit) {
        throw ChunkOutOfRange(chunk, kChunkLimit);
    }
}

}  // namespace

Modulus::Modulus(std::uint64_t value) : value_(value) {
    if (value == 0) {
        throw ModulusOutOfRange("modulus must be at least 1");
    }
    if (value >= kModulusLimit) {
        throw ModulusOutOfRange("modulus " + std::to_string(value) + " must be below 2^63");
    }
}

std::size_t Modulus::decimal_digits() const noexcept {
    std::size_t count = 0;
    std::uint64_t v = value_;
    do {
        ++count;
        v /= 10;
    } while (v != 0);
    return count;
}

ModulusClass classify(Modulus m) {
    switch (m.value()) {
        case 1: return ModulusClass::Trivial;
        case 2: return ModulusClass::Two;
        case 5: return ModulusClass::Five;
        default: return m.coprime_to_ten() ? ModulusClass::CoprimeToTen : ModulusClass::Unsupported;
    }
}

std::string_view to_string(ModulusClass c) {
    switch (c) {
        case ModulusClass::Two: return "two";
        case ModulusClass::Five: return "five";
        case ModulusClass::CoprimeToTen: return "coprime_to_ten";
        case ModulusClass::Trivial: return "trivial";
        case ModulusClass::Unsupported: return "unsupported";
    }
    return "unsupported";
}

Multiplier::Multiplier(Modulus modulus, unsigned chunk, std::uint64_t t)
    : modulus_(modulus), chunk_(chunk), t_(t) {
    require_coprime(modulus);
    require_chunk(chunk);
    const std::uint64_t m = modulus.value();
    if (t < 1 || t >= m) {
        throw InvalidMultiplier("t = " + std::to_string(t) + " outside [1, " +
                                std::to_string(m - 1) + "] for modulus " + std::to_string(m));
    }
    // Congruence certificate: 10^chunk * t + 1 ≡ 0 (mod m).
    const std::uint64_t base = pow10_mod(chunk, m);
    if ((static_cast<u128>(base) * t + 1) % m != 0) {
        throw InvalidMultiplier("10^" + std::to_string(chunk) + " * " + std::to_string(t) +
                                " + 1 is not divisible by " + std::to_string(m));
    }
    if (chunk == 1) {
        const u128 numerator = static_cast<u128>(10) * t + 1;
        const std::uint64_t k = static_cast<std::uint64_t>(numerator / m);
        if (numerator % m != 0 || k < 1 || k > 9 || (static_cast<u128>(k) * m) % 10 != 1) {
            throw InvalidMultiplier("cofactor identity 10t+1 = k*m failed for modulus " +
                                    std::to_string(m));
        }
        k_ = k;
    }
}

Multiplier closed_form_t(Modulus m) {
    require_coprime(m);
    const u128 v = m.value();
    u128 numerator;
    switch (m.unit_digit()) {
        case 1: numerator = v - 1; break;
        case 3: numerator = 7 * v - 1; break;
        case 7: numerator = 3 * v - 1; break;
        case 9: numerator = 9 * v - 1; break;
        default: throw NotCoprimeToTen(m.value());
    }
    return Multiplier(m, 1, static_cast<std::uint64_t>(numerator / 10));
}

Multiplier inverse_t(Modulus m, unsigned chunk) {
    require_coprime(m);
    require_chunk(chunk);
    const std::uint64_t base = pow10_mod(chunk, m.value());
    const std::uint64_t inv = mod_inverse(base, m.value());
    const std::uint64_t t = (m.value() - inv) % m.value();
    return Multiplier(m, chunk, t);
}

BruteForceResult brute_force_t(Modulus m, unsigned chunk) {
    require_coprime(m);
    require_chunk(chunk);
    if (m.value() > kScanLimit) {
        throw ModulusTooLargeForScan(m.value(), kScanLimit);
    }
    const std::uint64_t modulus = m.value();
    const std::uint64_t base = pow10_mod(chunk, modulus);
    std::uint64_t found = 0;
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < modulus; ++t) {
        if ((base * t + 1) % modulus == 0) {  // base, t < 10^6 so no overflow
            if (count == 0) found = t;
            ++count;
        }
    }
    if (count == 0) {
        throw InvalidMultiplier("no witness in [0, m) for modulus " + std::to_string(modulus));
    }
    return BruteForceResult{Multiplier(m, chunk, found), count};
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    if (limit > kSieveLimit) {
        throw LimitTooLarge(limit, kSieveLimit);
    }
    std::vector<std::uint64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!composite[p]) {
            for (std::uint64_t q = p * p; q <= limit; q += p) {
                composite[q] = true;
            }
        }
    }
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!composite[p]) {
            primes.push_back(p);
        }
    }
    return primes;
}

}  // namespace recdiv
