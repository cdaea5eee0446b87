// Python bindings for the digit-cancellation divisibility engine. Numbers
// cross the boundary as decimal strings so arbitrary precision survives;
// moduli, witnesses, and residues fit native integers by construction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "recdiv/digits.hpp"
#include "recdiv/multiplier.hpp"
#include "recdiv/oracle.hpp"
#include "recdiv/reducer.hpp"

namespace py = pybind11;
using namespace recdiv;

namespace {

DigitString parse_number(const std::string& number) {
    std::string cleaned = number;
    std::erase(cleaned, '_');
    return parse_decimal(cleaned);
}

py::dict multiplier_to_dict(const Multiplier& mult) {
    py::dict out;
    out["modulus"] = mult.modulus().value();
    out["chunk"] = mult.chunk();
    out["t"] = mult.t();
    out["k"] = mult.cofactor() ? py::cast(*mult.cofactor()) : py::none();
    return out;
}

py::dict trace_to_dict(const ReductionTrace& trace) {
    py::list steps;
    for (const StepRecord& s : trace.steps) {
        py::dict record;
        record["before"] = to_text(s.value_before);
        record["q"] = to_text(s.quotient);
        record["r"] = s.tail;
        record["after"] = to_text(s.value_after);
        steps.append(record);
    }
    py::dict out;
    out["modulus"] = trace.multiplier.modulus().value();
    out["chunk"] = trace.multiplier.chunk();
    out["t"] = trace.multiplier.t();
    out["steps"] = steps;
    out["terminal_residue"] = trace.terminal_residue;
    out["divisible"] = trace.divisible;
    return out;
}

}  // namespace

PYBIND11_MODULE(_recdiv, m) {
    m.doc() = "Divisibility tests that cancel trailing digits with a witness multiplier";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def(
        "is_divisible",
        [](const std::string& number, std::uint64_t modulus, unsigned chunk) {
            return is_divisible(parse_number(number), Modulus(modulus), chunk).divisible;
        },
        py::arg("number"), py::arg("modulus"), py::arg("chunk") = 1,
        "Divisibility verdict for a decimal number string.");

    m.def(
        "trace",
        [](const std::string& number, std::uint64_t modulus, unsigned chunk) -> py::object {
            Verdict verdict = is_divisible(parse_number(number), Modulus(modulus), chunk);
            if (!verdict.trace) {
                py::dict out;
                out["modulus"] = modulus;
                out["divisible"] = verdict.divisible;
                return out;
            }
            return trace_to_dict(*verdict.trace);
        },
        py::arg("number"), py::arg("modulus"), py::arg("chunk") = 1,
        "Verdict plus the full reduction chain (step records for moduli coprime to 10).");

    m.def(
        "classify",
        [](std::uint64_t modulus) { return std::string(to_string(classify(Modulus(modulus)))); },
        py::arg("modulus"));

    m.def(
        "multiplier_for",
        [](std::uint64_t modulus, unsigned chunk) {
            return multiplier_to_dict(inverse_t(Modulus(modulus), chunk));
        },
        py::arg("modulus"), py::arg("chunk") = 1,
        "Witness multiplier computed by extended Euclid.");

    m.def(
        "closed_form_t",
        [](std::uint64_t modulus) { return closed_form_t(Modulus(modulus)).t(); },
        py::arg("modulus"), "Witness by the four-case closed form (chunk 1).");

    m.def(
        "inverse_t",
        [](std::uint64_t modulus, unsigned chunk) { return inverse_t(Modulus(modulus), chunk).t(); },
        py::arg("modulus"), py::arg("chunk") = 1);

    m.def(
        "brute_force_t",
        [](std::uint64_t modulus, unsigned chunk) {
            const BruteForceResult result = brute_force_t(Modulus(modulus), chunk);
            return py::make_tuple(result.multiplier.t(), result.solution_count);
        },
        py::arg("modulus"), py::arg("chunk") = 1,
        "Scan witness and solution count (the uniqueness oracle).");

    m.def(
        "mod_direct",
        [](const std::string& number, std::uint64_t modulus) {
            return mod_direct(parse_number(number), Modulus(modulus));
        },
        py::arg("number"), py::arg("modulus"),
        "Residue by most-significant-first Horner reduction (the independent oracle).");

    m.def(
        "exhaustive_verdict_scan",
        [](std::uint64_t modulus, unsigned chunk, std::uint64_t n_max) {
            return exhaustive_verdict_scan(Modulus(modulus), chunk, n_max);
        },
        py::arg("modulus"), py::arg("chunk"), py::arg("n_max"),
        "First n in 0..n_max where chain and oracle verdicts disagree, or None.");

    m.def(
        "note1_check",
        [](const std::string& number, std::uint64_t modulus) {
            return std::string(to_string(note1_check(parse_number(number), Modulus(modulus))));
        },
        py::arg("number"), py::arg("modulus"),
        "Tri-state digit-count diagnostic: holds / fails_nonpositive / fails_count.");

    m.def(
        "note1_survey",
        [](std::uint64_t modulus, std::uint64_t samples, std::size_t digits, std::uint64_t seed) {
            const Note1Summary summary = note1_survey(Modulus(modulus), samples, digits, seed);
            py::dict out;
            out["holds"] = summary.holds;
            out["fails_nonpositive"] = summary.fails_nonpositive;
            out["fails_count"] = summary.fails_count;
            return out;
        },
        py::arg("modulus"), py::arg("samples"), py::arg("digits"), py::arg("seed") = 1);

    m.def("primes_up_to", [](std::uint64_t limit) { return primes_up_to(limit); },
          py::arg("limit"));
}
