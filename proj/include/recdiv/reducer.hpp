#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "recdiv/digits.hpp"
#include "recdiv/multiplier.hpp"

namespace recdiv {

/// One reduction step applied to the magnitude of value_before:
/// value_after = quotient - t * tail, where value_before's magnitude splits
/// as quotient * 10^chunk + tail. Transport law: 10^chunk * value_after ≡
/// value_before (mod modulus).
struct StepRecord {
    SignedValue value_before;
    DigitString quotient;
    std::uint64_t tail = 0;
    DigitString t_times_tail;
    SignedValue value_after;
};

/// Full record of a reduction chain and its verdict.
struct ReductionTrace {
    Multiplier multiplier;
    std::vector<StepRecord> steps;
    SignedValue terminal_value;
    std::uint64_t terminal_residue = 0;
    bool divisible = false;
};

/// Chain outcome without per-step records; same loop, cheap enough to run in
/// bulk for scans and benchmarks.
struct ChainSummary {
    std::uint64_t steps = 0;
    std::uint64_t terminal_residue = 0;
    bool divisible = false;
};

/// floor(v / 10^chunk) - t * (v mod 10^chunk), computed in the digit domain.
SignedValue step(const DigitString& v, const Multiplier& mult);

/// Runs the chain on |n|, discarding signs between steps, until the magnitude
/// is at most modulus * 10^chunk; above that bound every step strictly
/// decreases the magnitude, so the chain terminates. The verdict comes from a
/// direct residue of the terminal magnitude (the chain preserves divisibility
/// but not residue values).
ReductionTrace reduce_chain(const DigitString& n, const Multiplier& mult);

ChainSummary reduce_summary(const DigitString& n, const Multiplier& mult);

struct Verdict {
    bool divisible = false;
    std::optional<ReductionTrace> trace;  // present only when a chain ran
};

/// Top-level dispatch: modulus 1 divides everything, 2 and 5 read the unit
/// digit, moduli coprime to 10 run a reduction chain, anything else throws
/// UnsupportedModulus.
Verdict is_divisible(const DigitString& n, Modulus m, unsigned chunk = 1);

enum class Note1Outcome { holds, fails_nonpositive, fails_count };
std::string_view to_string(Note1Outcome outcome);

/// Diagnostic for the digit-count identity digit_count(n) = digit_count(v') + 1
/// with v' = step(n) at chunk 1. The identity has counterexamples, so this
/// reports a tri-state instead of asserting it: fails_nonpositive when
/// v' <= 0, fails_count when v' is positive but the count drops by more
/// than one.
Note1Outcome note1_check(const DigitString& n, Modulus m);

struct Note1Summary {
    std::uint64_t holds = 0;
    std::uint64_t fails_nonpositive = 0;
    std::uint64_t fails_count = 0;

    std::uint64_t total() const noexcept { return holds + fails_nonpositive + fails_count; }
};

/// Outcome counts of note1_check over sample_count pseudo-random values with
/// exactly digit_length digits, drawn with Lcg64(seed).
Note1Summary note1_survey(Modulus m, std::uint64_t sample_count, std::size_t digit_length,
                          std::uint64_t seed);

}  // namespace recdiv
