// recdiv: divisibility tests that cancel trailing digits with a witness
// multiplier, for any modulus coprime to 10, plus the unit-digit tests for
// 2 and 5. Exit codes: 0 divisible / success, 1 not divisible, 2 usage or
// parse error, 3 unsupported modulus, 4 selfcheck failure.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recdiv/digits.hpp"
#include "recdiv/multiplier.hpp"
#include "recdiv/oracle.hpp"
#include "recdiv/random.hpp"
#include "recdiv/reducer.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace recdiv;

constexpr int kExitDivisible = 0;
constexpr int kExitNotDivisible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedModulus = 3;
constexpr int kExitCheckFailed = 4;

// "-" reads one whitespace-delimited token from stdin, "@path" reads a file
// (whitespace inside is ignored so wrapped digits work), underscores are
// visual separators and are stripped.
std::string read_number_argument(const std::string& arg) {
    std::string raw;
    if (arg == "-") {
        if (!(std::cin >> raw)) {
            throw EmptyInput();
        }
    } else if (!arg.empty() && arg.front() == '@') {
        std::ifstream file(arg.substr(1));
        if (!file) {
            throw Error("cannot open file '" + arg.substr(1) + "'");
        }
        std::ostringstream content;
        content << file.rdbuf();
        raw = content.str();
        std::erase_if(raw, [](unsigned char c) { return std::isspace(c) != 0; });
    } else {
        raw = arg;
    }
    std::erase(raw, '_');
    return raw;
}

std::uint64_t signed_residue(const SignedValue& v, Modulus m) {
    const std::uint64_t r = mod_direct(v.magnitude, m);
    return v.is_negative() ? (m.value() - r) % m.value() : r;
}

json trace_to_json(const ReductionTrace& trace) {
    json steps = json::array();
    for (const StepRecord& s : trace.steps) {
        steps.push_back(json{{"before", to_text(s.value_before)},
                             {"q", to_text(s.quotient)},
                             {"r", s.tail},
                             {"after", to_text(s.value_after)}});
    }
    return json{{"modulus", trace.multiplier.modulus().value()},
                {"chunk", trace.multiplier.chunk()},
                {"t", trace.multiplier.t()},
                {"steps", std::move(steps)},
                {"terminal_residue", trace.terminal_residue},
                {"divisible", trace.divisible}};
}

void print_trace(const ReductionTrace& trace, std::ostream& out) {
    for (const StepRecord& s : trace.steps) {
        out << to_text(s.value_before) << " -> " << to_text(s.quotient) << " - "
            << trace.multiplier.t() << "*" << s.tail << " = " << to_text(s.value_after)
            << "\n";
    }
}

int cmd_test(const std::string& number_arg, std::uint64_t modulus_value, unsigned chunk,
             bool with_trace, bool as_json) {
    const DigitString n = parse_decimal(read_number_argument(number_arg));
    const Modulus m(modulus_value);
    const Verdict verdict = is_divisible(n, m, chunk);
    if (as_json) {
        json out = verdict.trace
                       ? trace_to_json(*verdict.trace)
                       : json{{"modulus", m.value()}, {"divisible", verdict.divisible}};
        std::cout << out.dump() << "\n";
    } else {
        if (with_trace && verdict.trace) {
            print_trace(*verdict.trace, std::cout);
        }
        std::cout << (verdict.divisible ? "divisible" : "not divisible") << "\n";
    }
    return verdict.divisible ? kExitDivisible : kExitNotDivisible;
}

const char* closed_form_case(unsigned unit_digit) {
    switch (unit_digit) {
        case 1: return "t = (m - 1) / 10";
        case 3: return "t = (7m - 1) / 10";
        case 7: return "t = (3m - 1) / 10";
        case 9: return "t = (9m - 1) / 10";
        default: return "";
    }
}

int cmd_multiplier(std::uint64_t modulus_value, unsigned chunk) {
    const Modulus m(modulus_value);
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw UnsupportedModulus(m.value());
    }
    // The Multiplier constructor checks the congruence certificate, so a
    // printed value is always certified.
    if (chunk == 1) {
        const Multiplier closed = closed_form_t(m);
        const Multiplier euclid = inverse_t(m, 1);
        if (closed.t() != euclid.t()) {
            std::cerr << "internal error: closed form and extended Euclid disagree for m = "
                      << m.value() << "\n";
            return kExitCheckFailed;
        }
        std::cout << "t = " << closed.t() << "\n";
        std::cout << "k = " << *closed.cofactor() << "\n";
        std::cout << "case: ud(m) = " << m.unit_digit() << " -> "
                  << closed_form_case(m.unit_digit()) << "\n";
    } else {
        std::cout << "t = " << inverse_t(m, chunk).t() << "\n";
    }
    return kExitDivisible;
}

int cmd_table(std::uint64_t max_prime) {
    if (max_prime > kScanLimit) {
        throw LimitTooLarge(max_prime, kScanLimit);
    }
    std::cout << "p ud t k\n";
    for (std::uint64_t p : primes_up_to(max_prime)) {
        if (p == 2 || p == 5) {
            continue;
        }
        const Modulus m(p);
        const Multiplier closed = closed_form_t(m);
        if (closed.t() != inverse_t(m, 1).t()) {
            std::cerr << "internal error: table row failed verification at p = " << p << "\n";
            return kExitCheckFailed;
        }
        std::cout << p << " " << m.unit_digit() << " " << closed.t() << " "
                  << *closed.cofactor() << "\n";
    }
    return kExitDivisible;
}

int cmd_note1_point(std::uint64_t modulus_value, const std::string& number_arg) {
    const Modulus m(modulus_value);
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw UnsupportedModulus(m.value());
    }
    const DigitString n = parse_decimal(read_number_argument(number_arg));
    const Note1Outcome outcome = note1_check(n, m);
    const SignedValue after = step(n, inverse_t(m, 1));
    std::cout << "outcome: " << to_string(outcome) << "\n";
    std::cout << "digit count before: " << digit_count(n) << "\n";
    std::cout << "digit count after: " << digit_count(after.magnitude) << "\n";
    std::cout << "step result: " << to_text(after) << "\n";
    return kExitDivisible;
}

int cmd_note1_survey(std::uint64_t modulus_value, std::uint64_t samples, std::size_t digits,
                     std::uint64_t seed) {
    const Modulus m(modulus_value);
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw UnsupportedModulus(m.value());
    }
    const Note1Summary summary = note1_survey(m, samples, digits, seed);
    const auto percent = [&](std::uint64_t count) {
        std::ostringstream out;
        out << std::fixed << std::setprecision(2)
            << (summary.total() == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                                  static_cast<double>(summary.total()));
        return out.str();
    };
    std::cout << "holds: " << summary.holds << " (" << percent(summary.holds) << "%)\n";
    std::cout << "fails_nonpositive: " << summary.fails_nonpositive << " ("
              << percent(summary.fails_nonpositive) << "%)\n";
    std::cout << "fails_count: " << summary.fails_count << " (" << percent(summary.fails_count)
              << "%)\n";
    return kExitDivisible;
}

bool check_trace_invariants(const ReductionTrace& trace, const DigitString& input,
                            std::string& error) {
    const Modulus m = trace.multiplier.modulus();
    std::uint64_t base = 1;
    for (unsigned i = 0; i < trace.multiplier.chunk(); ++i) {
        base = base * 10 % m.value();
    }
    const SignedValue* previous = nullptr;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& s = trace.steps[i];
        if (i == 0) {
            if (s.value_before.magnitude != input || s.value_before.is_negative()) {
                error = "first step does not start at the input";
                return false;
            }
        } else if (!(s.value_before == *previous)) {
            error = "step " + std::to_string(i) + " does not chain from the previous step";
            return false;
        }
        const std::uint64_t before_res = signed_residue(s.value_before, m);
        const std::uint64_t after_res = signed_residue(s.value_after, m);
        if (static_cast<unsigned __int128>(base) * after_res % m.value() != before_res) {
            error = "residue transport violated at step " + std::to_string(i);
            return false;
        }
        if (compare(s.value_after.magnitude, s.value_before.magnitude) !=
            std::strong_ordering::less) {
            error = "step " + std::to_string(i) + " did not decrease the magnitude";
            return false;
        }
        previous = &s.value_after;
    }
    if (trace.terminal_residue != mod_direct(trace.terminal_value.magnitude, m) ||
        trace.divisible != (trace.terminal_residue == 0)) {
        error = "terminal residue or verdict inconsistent";
        return false;
    }
    return true;
}

int cmd_selfcheck(std::optional<std::uint64_t> inject_prime) {
    // Multiplier agreement across all three computation paths.
    for (std::uint64_t p : primes_up_to(10'000)) {
        if (p == 2 || p == 5) {
            continue;
        }
        const Modulus m(p);
        std::uint64_t closed = closed_form_t(m).t();
        if (inject_prime && *inject_prime == p) {
            closed += 1;  // emulates a build with t off by one for this prime
        }
        const std::uint64_t euclid = inverse_t(m, 1).t();
        const BruteForceResult brute = brute_force_t(m, 1);
        if (closed != euclid || euclid != brute.multiplier.t() || brute.solution_count != 1) {
            std::cout << "selfcheck FAILED: multiplier disagreement at p = " << p
                      << " (closed form " << closed << ", extended Euclid " << euclid
                      << ", brute force " << brute.multiplier.t() << ", solutions "
                      << brute.solution_count << ")\n";
            return kExitCheckFailed;
        }
    }
    std::cout << "multiplier agreement: ok (primes < 10000)\n";

    // Chain verdicts against the direct residue oracle.
    for (std::uint64_t mv : {3ull, 7ull, 9ull, 11ull, 13ull, 17ull, 19ull, 21ull, 49ull,
                             91ull, 97ull, 101ull}) {
        for (unsigned chunk = 1; chunk <= 3; ++chunk) {
            const auto counterexample = exhaustive_verdict_scan(Modulus(mv), chunk, 10'000);
            if (counterexample) {
                std::cout << "selfcheck FAILED: verdict mismatch at n = " << *counterexample
                          << " (modulus " << mv << ", chunk " << chunk << ")\n";
                return kExitCheckFailed;
            }
        }
    }
    std::cout << "verdict scans: ok (12 moduli, chunks 1-3, n <= 10000)\n";

    // Trace invariants on a deterministic corpus of long inputs.
    const std::vector<std::uint64_t> moduli{3, 7, 9, 11, 13, 17, 19, 21, 49, 91, 97, 101};
    Lcg64 rng(1);
    for (int i = 0; i < 200; ++i) {
        const Modulus m(moduli[rng.next_below(moduli.size())]);
        const unsigned chunk = 1 + static_cast<unsigned>(rng.next_below(3));
        const DigitString n = random_digit_string(rng, 1 + rng.next_below(120));
        const ReductionTrace trace = reduce_chain(n, inverse_t(m, chunk));
        std::string error;
        if (!check_trace_invariants(trace, n, error)) {
            std::cout << "selfcheck FAILED: " << error << " (modulus " << m.value()
                      << ", chunk " << chunk << ", n = " << to_text(n) << ")\n";
            return kExitCheckFailed;
        }
        if (trace.divisible != (mod_direct(n, m) == 0)) {
            std::cout << "selfcheck FAILED: trace verdict mismatch (modulus " << m.value()
                      << ", chunk " << chunk << ", n = " << to_text(n) << ")\n";
            return kExitCheckFailed;
        }
    }
    std::cout << "trace invariants: ok (200 random chains)\n";
    std::cout << "selfcheck passed\n";
    return kExitDivisible;
}

struct BenchRow {
    std::uint64_t modulus = 0;
    unsigned chunk = 0;
    std::size_t input_digits = 0;
    std::uint64_t trials = 0;
    double mean_steps = 0;
    double mean_ns_recurrence = 0;
    double mean_ns_oracle = 0;

    std::string to_csv() const {
        std::ostringstream row;
        row << modulus << "," << chunk << "," << input_digits << "," << trials << ","
            << std::fixed << std::setprecision(2) << mean_steps << "," << std::setprecision(1)
            << mean_ns_recurrence << "," << mean_ns_oracle;
        return row.str();
    }
};

int cmd_bench(std::size_t input_digits, const std::vector<unsigned>& chunks,
              std::uint64_t modulus_value, std::uint64_t trials, std::uint64_t seed) {
    const Modulus m(modulus_value);
    if (classify(m) != ModulusClass::CoprimeToTen) {
        throw UnsupportedModulus(m.value());
    }
    if (input_digits == 0 || input_digits > 1'000'000) {
        throw Error("input digits must be in [1, 1000000]");
    }
    if (trials == 0) {
        throw Error("trials must be at least 1");
    }
    using clock = std::chrono::steady_clock;
    std::cout << "modulus,chunk,input_digits,trials,mean_steps,mean_ns_recurrence,mean_ns_oracle\n";
    for (unsigned chunk : chunks) {
        const Multiplier mult = inverse_t(m, chunk);
        Lcg64 rng(seed);  // identical inputs for every chunk
        std::uint64_t total_steps = 0;
        std::int64_t total_ns_recurrence = 0;
        std::int64_t total_ns_oracle = 0;
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const DigitString n = random_digit_string(rng, input_digits);
            const auto t0 = clock::now();
            const ChainSummary summary = reduce_summary(n, mult);
            const auto t1 = clock::now();
            const std::uint64_t residue = mod_direct(n, m);
            const auto t2 = clock::now();
            if (summary.divisible != (residue == 0)) {
                std::cerr << "internal error: bench verdict mismatch\n";
                return kExitCheckFailed;
            }
            total_steps += summary.steps;
            total_ns_recurrence +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
            total_ns_oracle +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
        }
        const double denom = static_cast<double>(trials);
        const BenchRow row{m.value(),
                           chunk,
                           input_digits,
                           trials,
                           static_cast<double>(total_steps) / denom,
                           static_cast<double>(total_ns_recurrence) / denom,
                           static_cast<double>(total_ns_oracle) / denom};
        std::cout << row.to_csv() << "\n";
    }
    return kExitDivisible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recurrence divisibility tests: cancel trailing digits with a witness multiplier"};
    app.require_subcommand(1);

    // test
    std::string test_number;
    std::uint64_t test_modulus = 0;
    unsigned test_chunk = 1;
    bool test_trace = false;
    bool test_json = false;
    CLI::App* test = app.add_subcommand("test", "test a number for divisibility");
    test->add_option("number", test_number,
                     "decimal number; '-' reads stdin, '@path' reads a file; underscores allowed")
        ->required();
    test->add_option("--modulus,-m", test_modulus, "modulus to test against")->required();
    test->add_option("--chunk,-c", test_chunk, "digits cancelled per step");
    test->add_flag("--trace", test_trace, "print each reduction step");
    test->add_flag("--json", test_json, "emit the trace as JSON");

    // multiplier
    std::uint64_t mult_modulus = 0;
    unsigned mult_chunk = 1;
    CLI::App* multiplier = app.add_subcommand("multiplier", "show the witness multiplier");
    multiplier->add_option("--modulus,-m", mult_modulus)->required();
    multiplier->add_option("--chunk,-c", mult_chunk);

    // table
    std::uint64_t table_max = 0;
    CLI::App* table = app.add_subcommand("table", "witness table for primes up to a bound");
    table->add_option("--max", table_max)->required();

    // note1
    std::uint64_t note1_modulus = 0;
    std::string note1_number;
    bool note1_survey_mode = false;
    std::size_t note1_digits = 0;
    std::uint64_t note1_samples = 0;
    std::uint64_t note1_seed = 1;
    CLI::App* note1 = app.add_subcommand("note1", "digit-count identity diagnostics");
    note1->add_option("--modulus,-m", note1_modulus)->required();
    CLI::Option* note1_n = note1->add_option("--n", note1_number, "check a single value");
    CLI::Option* survey_flag =
        note1->add_flag("--survey", note1_survey_mode, "sample random values instead");
    CLI::Option* note1_digits_opt = note1->add_option("--digits", note1_digits);
    CLI::Option* note1_samples_opt = note1->add_option("--samples", note1_samples);
    note1->add_option("--seed", note1_seed);
    note1_n->excludes(survey_flag);
    survey_flag->needs(note1_digits_opt);
    survey_flag->needs(note1_samples_opt);

    // selfcheck
    std::uint64_t inject_prime = 0;
    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the built-in correctness suites");
    CLI::Option* inject_opt = selfcheck->add_option(
        "--inject-t-off-by-one", inject_prime,
        "testing hook: perturb the closed-form t for this prime to force a failure");

    // bench
    std::size_t bench_digits = 0;
    std::vector<unsigned> bench_chunks{1};
    std::uint64_t bench_modulus = 0;
    std::uint64_t bench_trials = 10;
    std::uint64_t bench_seed = 1;
    CLI::App* bench = app.add_subcommand("bench", "time reduction chains against the direct oracle");
    bench->add_option("--digits", bench_digits)->required();
    bench->add_option("--chunks", bench_chunks)->delimiter(',');
    bench->add_option("--modulus,-m", bench_modulus)->required();
    bench->add_option("--trials", bench_trials);
    bench->add_option("--seed", bench_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (test->parsed()) {
            return cmd_test(test_number, test_modulus, test_chunk, test_trace, test_json);
        }
        if (multiplier->parsed()) {
            return cmd_multiplier(mult_modulus, mult_chunk);
        }
        if (table->parsed()) {
            return cmd_table(table_max);
        }
        if (note1->parsed()) {
            if (note1_survey_mode) {
                return cmd_note1_survey(note1_modulus, note1_samples, note1_digits, note1_seed);
            }
            if (note1_n->count() == 0) {
                std::cerr << "note1 needs --n or --survey\n";
                return kExitUsage;
            }
            return cmd_note1_point(note1_modulus, note1_number);
        }
        if (selfcheck->parsed()) {
            return cmd_selfcheck(inject_opt->count() > 0
                                     ? std::optional<std::uint64_t>(inject_prime)
                                     : std::nullopt);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_digits, bench_chunks, bench_modulus, bench_trials, bench_seed);
        }
    } catch (const UnsupportedModulus& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedModulus;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
