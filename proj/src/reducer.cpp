#include "recdiv/reducer.hpp"

#include <cassert>
#include <utility>

#include "recdiv/oracle.hpp"
#include "recdiv/random.hpp"

namespace recdiv {

namespace {

std::uint64_t pow10_exact(unsigned exponent) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) r *= 10;
    return r;
}

struct ChainEnd {
    SignedValue terminal;
    std::uint64_t steps;
};

// Shared chain driver. Calls on_step for every step; the sign is carried in
// the records but the next step always applies to the magnitude.
template <typename OnStep>
ChainEnd drive_chain(const DigitString& n, const Multiplier& mult, OnStep&& on_step) {
    const DigitString t_digits = DigitString::from_u64(mult.t());
    const DigitString stop_bound =
        mul_small(DigitString::from_u64(mult.modulus().value()), pow10_exact(mult.chunk()));
    SignedValue current(Sign::positive, n);
    std::uint64_t steps = 0;
    while (compare(current.magnitude, stop_bound) == std::strong_ordering::greater) {
        auto [quotient, tail] = split_tail(current.magnitude, mult.chunk());
        DigitString t_times_tail = mul_small(t_digits, tail);
        SignedValue after = sub_signed(quotient, t_times_tail);
        // Above the stop bound, t*tail < m*10^chunk <= |v| and q < |v|, so the
        // magnitude strictly decreases and the loop terminates.
        assert(compare(after.magnitude, current.magnitude) == std::strong_ordering::less);
        on_step(current, std::move(quotient), tail, std::move(t_times_tail), after);
        current = std::move(after);
        ++steps;
    }
    return ChainEnd{std::move(current), steps};
}

}  // namespace

SignedValue step(const DigitString& v, const Multiplier& mult) {
    const auto [quotient, tail] = split_tail(v, mult.chunk());
    const DigitString t_times_tail = mul_small(DigitString::from_u64(mult.t()), tail);
    return sub_signed(quotient, t_times_tail);
}

ReductionTrace reduce_chain(const DigitString& n, const Multiplier& mult) {
    ReductionTrace trace{mult, {}, SignedValue(), 0, false};
    auto end = drive_chain(n, mult,
                           [&trace](const SignedValue& before, DigitString quotient,
                                    std::uint64_t tail, DigitString t_times_tail,
                                    const SignedValue& after) {
                               trace.steps.push_back(StepRecord{before, std::move(quotient), tail,
                                                                std::move(t_times_tail), after});
                           });
    trace.terminal_value = std::move(end.terminal);
    trace.terminal_residue = mod_direct(trace.terminal_value.magnitude, mult.modulus());
    trace.divisible = trace.terminal_residue == 0;
    return trace;
}

ChainSummary reduce_summary(const DigitString& n, const Multiplier& mult) {
    auto end = drive_chain(n, mult,
                           [](const SignedValue&, DigitString&&, std::uint64_t, DigitString&&,
                              const SignedValue&) {});
    ChainSummary summary;
    summary.steps = end.steps;
    summary.terminal_residue = mod_direct(end.terminal.magnitude, mult.modulus());
    summary.divisible = summary.terminal_residue == 0;
    return summary;
}

Verdict is_divisible(const DigitString& n, Modulus m, unsigned chunk) {
    switch (classify(m)) {
        case ModulusClass::Trivial:
            return Verdict{true, std::nullopt};
        case ModulusClass::Two:
            return Verdict{n.unit_digit() % 2 == 0, std::nullopt};
        case ModulusClass::Five:
            return Verdict{n.unit_digit() == 0 || n.unit_digit() == 5, std::nullopt};
        case ModulusClass::CoprimeToTen: {
            ReductionTrace trace = reduce_chain(n, inverse_t(m, chunk));
            const bool divisible = trace.divisible;
            return Verdict{divisible, std::move(trace)};
        }
        case ModulusClass::Unsupported:
        default:
            throw UnsupportedModulus(m.value());
    }
}

std::string_view to_string(Note1Outcome outcome) {
    switch (outcome) {
        case Note1Outcome::holds: return "holds";
        case Note1Outcome::fails_nonpositive: return "fails_nonpositive";
        case Note1Outcome::fails_count: return "fails_count";
    }
    return "fails_count";
}

Note1Outcome note1_check(const DigitString& n, Modulus m) {
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw NotCoprimeToTen(m.value());
    }
    if (n.is_zero()) {
        throw ZeroInput();
    }
    const SignedValue after = step(n, inverse_t(m, 1));
    if (after.is_nonpositive()) {
        return Note1Outcome::fails_nonpositive;
    }
    return digit_count(n) == digit_count(after.magnitude) + 1 ? Note1Outcome::holds
                                                              : Note1Outcome::fails_count;
}

Note1Summary note1_survey(Modulus m, std::uint64_t sample_count, std::size_t digit_length,
                          std::uint64_t seed) {
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw NotCoprimeToTen(m.value());
    }
    if (digit_length == 0) {
        throw Error("digit length must be at least 1");
    }
    Lcg64 rng(seed);
    Note1Summary summary;
    for (std::uint64_t i = 0; i < sample_count; ++i) {
        switch (note1_check(random_digit_string(rng, digit_length), m)) {
            case Note1Outcome::holds: ++summary.holds; break;
            case Note1Outcome::fails_nonpositive: ++summary.fails_nonpositive; break;
            case Note1Outcome::fails_count: ++summary.fails_count; break;
        }
    }
    return summary;
}

}  // namespace recdiv
