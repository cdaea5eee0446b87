// Acceptance suite: one pass/fail line per project-level criterion.
// Exit code 0 only if every criterion passes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "recdiv/digits.hpp"
#include "recdiv/multiplier.hpp"
#include "recdiv/oracle.hpp"
#include "recdiv/reducer.hpp"
#include "test_support.hpp"

namespace {

using namespace recdiv;
using recdiv::testing::pow10_mod;
using recdiv::testing::run_cli;
using recdiv::testing::signed_residue;

using Failure = std::optional<std::string>;

class Harness {
public:
    void run(const std::string& name, const std::function<Failure()>& check) {
        const auto start = std::chrono::steady_clock::now();
        Failure failure;
        try {
            failure = check();
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        if (failure) {
            ++failures_;
            line << "[FAIL] " << name << ": " << *failure;
        } else {
            line << "[PASS] " << name;
        }
        line << " (" << std::fixed << std::setprecision(2) << seconds << " s)";
        std::cout << line.str() << std::endl;
    }

    int exit_code() const { return failures_ == 0 ? 0 : 1; }

private:
    int failures_ = 0;
};

const std::vector<std::uint64_t> kScanModuli{3, 7, 9, 11, 13, 17, 19, 21, 23, 29, 49, 91, 97, 101};

Failure criterion_multiplier_agreement() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (std::uint64_t p : primes_up_to(99'999)) {
        if (p == 2 || p == 5) continue;
        const Modulus m(p);
        const Multiplier closed = closed_form_t(m);
        const Multiplier euclid = inverse_t(m, 1);
        const BruteForceResult brute = brute_force_t(m, 1);
        if (closed.t() != euclid.t() || euclid.t() != brute.multiplier.t()) {
            return "t mismatch at p = " + std::to_string(p) + " (closed " +
                   std::to_string(closed.t()) + ", euclid " + std::to_string(euclid.t()) +
                   ", brute " + std::to_string(brute.multiplier.t()) + ")";
        }
        const std::uint64_t t = closed.t();
        const std::uint64_t k = closed.cofactor().value_or(0);
        if (10 * t + 1 != k * p || k < 1 || k > 9 || (k * p) % 10 != 1) {
            return "cofactor identity failed at p = " + std::to_string(p);
        }
        ++checked;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 10.0) {
        return "took " + std::to_string(seconds) + " s (limit 10 s)";
    }
    if (checked != 9590) {  // pi(10^5) = 9592, minus 2 and 5
        return "expected 9590 primes, checked " + std::to_string(checked);
    }
    return std::nullopt;
}

Failure criterion_verdict_scans() {
    for (std::uint64_t m : kScanModuli) {
        for (unsigned chunk : {1u, 2u, 3u}) {
            if (const auto n = exhaustive_verdict_scan(Modulus(m), chunk, 10'000)) {
                return "counterexample n = " + std::to_string(*n) + " at m = " +
                       std::to_string(m) + ", chunk " + std::to_string(chunk);
            }
        }
    }
    for (std::uint64_t m : {7ull, 13ull}) {
        for (unsigned chunk : {1u, 2u, 3u}) {
            if (const auto n = exhaustive_verdict_scan(Modulus(m), chunk, 100'000)) {
                return "counterexample n = " + std::to_string(*n) + " at m = " +
                       std::to_string(m) + ", chunk " + std::to_string(chunk);
            }
        }
    }
    return std::nullopt;
}

Failure criterion_closed_form_spot_values() {
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
        {3, 2}, {7, 2}, {11, 1}, {13, 9}, {17, 5}, {19, 17}, {23, 16}, {29, 26}, {31, 3}};
    for (const auto& [p, t] : expected) {
        const Multiplier mult = closed_form_t(Modulus(p));
        if (mult.t() != t) {
            return "t(" + std::to_string(p) + ") = " + std::to_string(mult.t()) +
                   ", expected " + std::to_string(t);
        }
        const std::uint64_t k = mult.cofactor().value_or(0);
        if (10 * t + 1 != k * p) {
            return "identity 10t+1 = kp failed at p = " + std::to_string(p);
        }
    }
    return std::nullopt;
}

Failure criterion_negative_intermediate_chain() {
    const auto cli = run_cli("test 1001 --modulus 7 --trace");
    const std::string expected =
        "1001 -> 100 - 2*1 = 98\n"
        "98 -> 9 - 2*8 = -7\n"
        "divisible\n";
    if (cli.exit_code != 0) {
        return "CLI exit code " + std::to_string(cli.exit_code) + ", expected 0";
    }
    if (cli.out != expected) {
        return "CLI trace differs from the 1001 -> 98 -> -7 chain; got:\n" + cli.out;
    }
    const ReductionTrace trace = reduce_chain(parse_decimal("1001"), inverse_t(Modulus(7), 1));
    if (trace.steps.size() != 2 || to_text(trace.steps[0].value_after) != "98" ||
        to_text(trace.steps[1].value_after) != "-7" || !trace.divisible) {
        return "library chain differs from 1001 -> 98 -> -7";
    }
    for (const StepRecord& s : trace.steps) {
        const std::uint64_t before = signed_residue(s.value_before, Modulus(7));
        const std::uint64_t after = signed_residue(s.value_after, Modulus(7));
        if (10 * after % 7 != before) {
            return "step " + to_text(s.value_before) + " -> " + to_text(s.value_after) +
                   " violates 10*after ≡ before (mod 7)";
        }
    }
    return std::nullopt;
}

struct CorpusChain {
    std::uint64_t modulus;
    unsigned chunk;
    DigitString n;
    ReductionTrace trace;
};

// Deterministic corpus of 10^3 chains over n <= 200 digits; regenerated
// identically by every criterion that uses it.
void for_each_corpus_chain(const std::function<void(const CorpusChain&)>& visit) {
    std::mt19937_64 rng(20240801);
    std::uniform_int_distribution<std::size_t> modulus_index(0, kScanModuli.size() - 1);
    std::uniform_int_distribution<unsigned> chunk_dist(1, 3);
    std::uniform_int_distribution<std::size_t> length_dist(1, 200);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> leading(1, 9);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t m = kScanModuli[modulus_index(rng)];
        const unsigned chunk = chunk_dist(rng);
        const std::size_t len = length_dist(rng);
        std::vector<std::uint8_t> digits(len);
        for (std::size_t j = 0; j + 1 < len; ++j) {
            digits[j] = static_cast<std::uint8_t>(digit(rng));
        }
        digits[len - 1] = static_cast<std::uint8_t>(len == 1 ? digit(rng) : leading(rng));
        const DigitString n = DigitString::from_digits(std::move(digits));
        visit(CorpusChain{m, chunk, n, reduce_chain(n, inverse_t(Modulus(m), chunk))});
    }
}

Failure criterion_residue_transport() {
    Failure failure;
    for_each_corpus_chain([&](const CorpusChain& chain) {
        if (failure) return;
        const std::uint64_t base = pow10_mod(chain.chunk, chain.modulus);
        for (std::size_t i = 0; i < chain.trace.steps.size(); ++i) {
            const StepRecord& s = chain.trace.steps[i];
            const std::uint64_t before = signed_residue(s.value_before, Modulus(chain.modulus));
            const std::uint64_t after = signed_residue(s.value_after, Modulus(chain.modulus));
            if (static_cast<unsigned __int128>(base) * after % chain.modulus != before) {
                failure = "transport violated at step " + std::to_string(i) + " (m = " +
                          std::to_string(chain.modulus) + ", chunk " +
                          std::to_string(chain.chunk) + ", n = " + to_text(chain.n) + ")";
                return;
            }
        }
        // The verdict itself must agree with the oracle on every corpus chain.
        if (chain.trace.divisible != (mod_direct(chain.n, Modulus(chain.modulus)) == 0)) {
            failure = "verdict mismatch on corpus chain (m = " + std::to_string(chain.modulus) +
                      ", n = " + to_text(chain.n) + ")";
        }
    });
    return failure;
}

Failure criterion_termination_and_length() {
    Failure failure;
    for_each_corpus_chain([&](const CorpusChain& chain) {
        if (failure) return;
        const std::size_t digits_n = digit_count(chain.n);
        const std::size_t digits_m = Modulus(chain.modulus).decimal_digits();
        const std::size_t bound = (digits_n + chain.chunk - 1) / chain.chunk + digits_m + 2;
        if (chain.trace.steps.size() > bound) {
            failure = "chain of " + std::to_string(chain.trace.steps.size()) +
                      " steps exceeds bound " + std::to_string(bound) + " (m = " +
                      std::to_string(chain.modulus) + ", chunk " + std::to_string(chain.chunk) +
                      ", digits " + std::to_string(digits_n) + ")";
            return;
        }
        for (std::size_t i = 0; i < chain.trace.steps.size(); ++i) {
            const StepRecord& s = chain.trace.steps[i];
            if (compare(s.value_after.magnitude, s.value_before.magnitude) !=
                std::strong_ordering::less) {
                failure = "step " + std::to_string(i) + " did not decrease the magnitude (m = " +
                          std::to_string(chain.modulus) + ", n = " + to_text(chain.n) + ")";
                return;
            }
        }
    });
    return failure;
}

Failure criterion_note1_diagnostics() {
    const auto expect = [](const char* n, Note1Outcome want) -> Failure {
        const Note1Outcome got = note1_check(parse_decimal(n), Modulus(7));
        if (got != want) {
            return std::string("note1_check(") + n + ", 7) = " + std::string(to_string(got)) +
                   ", expected " + std::string(to_string(want));
        }
        return std::nullopt;
    };
    if (auto f = expect("12345", Note1Outcome::holds)) return f;
    if (auto f = expect("21", Note1Outcome::fails_nonpositive)) return f;
    if (auto f = expect("104", Note1Outcome::fails_count)) return f;
    return std::nullopt;
}

Failure criterion_uniqueness() {
    for (std::uint64_t m = 2; m <= 10'000; ++m) {
        if (m % 2 == 0 || m % 5 == 0) continue;
        for (unsigned chunk : {1u, 2u}) {
            const BruteForceResult r = brute_force_t(Modulus(m), chunk);
            if (r.solution_count != 1) {
                return "solution_count = " + std::to_string(r.solution_count) + " at m = " +
                       std::to_string(m) + ", chunk " + std::to_string(chunk);
            }
        }
    }
    return std::nullopt;
}

Failure criterion_bench_sanity() {
    const auto start = std::chrono::steady_clock::now();
    const std::string args = "bench --digits 1000 --chunks 1,4 --modulus 7 --trials 5 --seed 42";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    if (first.exit_code != 0 || second.exit_code != 0) {
        return "bench exit codes " + std::to_string(first.exit_code) + " / " +
               std::to_string(second.exit_code);
    }
    const auto rows = [](const std::string& out) {
        std::vector<std::vector<std::string>> parsed;
        std::istringstream stream(out);
        std::string line;
        std::getline(stream, line);  // header
        while (std::getline(stream, line)) {
            std::vector<std::string> fields;
            std::istringstream fields_in(line);
            std::string field;
            while (std::getline(fields_in, field, ',')) {
                fields.push_back(field);
            }
            parsed.push_back(std::move(fields));
        }
        return parsed;
    };
    const auto first_rows = rows(first.out);
    const auto second_rows = rows(second.out);
    if (first_rows.size() != 2 || second_rows.size() != 2) {
        return "expected two CSV rows per run";
    }
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t col = 0; col < 5; ++col) {  // timing columns excluded
            if (first_rows[i][col] != second_rows[i][col]) {
                return "non-timing column " + std::to_string(col) +
                       " differs across runs with the same seed";
            }
        }
    }
    const double steps_chunk1 = std::stod(first_rows[0][4]);
    const double steps_chunk4 = std::stod(first_rows[1][4]);
    if (steps_chunk1 < 997.0 || steps_chunk1 > 1003.0) {
        return "chunk 1 mean_steps = " + first_rows[0][4] + ", expected within [997, 1003]";
    }
    if (steps_chunk4 < 248.0 || steps_chunk4 > 255.0) {
        return "chunk 4 mean_steps = " + first_rows[1][4] + ", expected within [248, 255]";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 10.0) {
        return "took " + std::to_string(seconds) + " s (limit 10 s)";
    }
    return std::nullopt;
}

Failure criterion_selfcheck() {
    const auto start = std::chrono::steady_clock::now();
    const auto clean = run_cli("selfcheck");
    if (clean.exit_code != 0) {
        return "clean selfcheck exited " + std::to_string(clean.exit_code) + "; output:\n" +
               clean.out;
    }
    const auto injected = run_cli("selfcheck --inject-t-off-by-one 7");
    if (injected.exit_code != 4) {
        return "fault-injected selfcheck exited " + std::to_string(injected.exit_code) +
               ", expected 4";
    }
    if (injected.out.find("p = 7") == std::string::npos) {
        return "fault-injected selfcheck did not print the failing case; output:\n" +
               injected.out;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= 30.0) {
        return "took " + std::to_string(seconds) + " s (limit 30 s)";
    }
    return std::nullopt;
}

}  // namespace

int main() {
    Harness harness;
    harness.run("criterion 1: multiplier agreement for all primes 2 < p < 10^5",
                criterion_multiplier_agreement);
    harness.run("criterion 2: verdict scans agree with the oracle (14 moduli, chunks 1-3)",
                criterion_verdict_scans);
    harness.run("criterion 3: closed-form spot values with 10t+1 = kp",
                criterion_closed_form_spot_values);
    harness.run("criterion 4: negative-intermediate chain 1001 -> 98 -> -7",
                criterion_negative_intermediate_chain);
    harness.run("criterion 5: residue transport on 10^3 random chains",
                criterion_residue_transport);
    harness.run("criterion 6: termination and chain-length bound on the same corpus",
                criterion_termination_and_length);
    harness.run("criterion 7: note1 tri-state diagnostics", criterion_note1_diagnostics);
    harness.run("criterion 8: witness uniqueness for coprime m <= 10^4, chunks 1-2",
                criterion_uniqueness);
    harness.run("criterion 9: bench sanity and seeded determinism", criterion_bench_sanity);
    harness.run("criterion 10: selfcheck passes clean and fails under fault injection",
                criterion_selfcheck);
    return harness.exit_code();
}
