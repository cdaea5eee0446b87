"""Divisibility tests that cancel trailing digits with a witness multiplier.

For any modulus m coprime to 10 there is a unique witness t in [1, m) with
10^c * t + 1 divisible by m; replacing v by floor(v / 10^c) - t * (v mod 10^c)
preserves divisibility by m while shedding c digits per step. Numbers are
passed as decimal strings, so inputs of any length work.
"""

from ._recdiv import (
    Error,
    brute_force_t,
    classify,
    closed_form_t,
    exhaustive_verdict_scan,
    inverse_t,
    is_divisible,
    mod_direct,
    multiplier_for,
    note1_check,
    note1_survey,
    primes_up_to,
    trace,
)

__all__ = [
    "Error",
    "brute_force_t",
    "classify",
    "closed_form_t",
    "exhaustive_verdict_scan",
    "inverse_t",
    "is_divisible",
    "mod_direct",
    "multiplier_for",
    "note1_check",
    "note1_survey",
    "primes_up_to",
    "trace",
]
