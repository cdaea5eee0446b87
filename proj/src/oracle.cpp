#include "recdiv/oracle.hpp"

#include "recdiv/reducer.hpp"

namespace recdiv {

std::uint64_t mod_direct(const DigitString& n, Modulus m) {
    const std::uint64_t modulus = m.value();
    std::uint64_t r = 0;
    for (auto it = n.digits().rbegin(); it != n.digits().rend(); ++it) {
        r = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(r) * 10 + *it) % modulus);
    }
    return r;
}

std::optional<std::uint64_t> exhaustive_verdict_scan(Modulus m, unsigned chunk,
                                                     std::uint64_t n_max) {
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw NotCoprimeToTen(m.value());
    }
    if (n_max > 10'000'000) {
        throw LimitTooLarge(n_max, 10'000'000);
    }
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const DigitString value = DigitString::from_u64(n);
        const bool chain_verdict = is_divisible(value, m, chunk).divisible;
        const bool direct_verdict = mod_direct(value, m) == 0;
        if (chain_verdict != direct_verdict) {
            return n;
        }
    }
    return std::nullopt;
}

}  // namespace recdiv
