"""Smoke tests for the recdiv extension module."""

import random

import pytest

import recdiv


def test_is_divisible_basic():
    assert recdiv.is_divisible("1001", 7) is True
    assert recdiv.is_divisible("123", 7) is False
    assert recdiv.is_divisible("1001", 7, chunk=2) is True
    assert recdiv.is_divisible("0", 7) is True


def test_unit_digit_and_trivial_classes():
    assert recdiv.is_divisible("35", 5) is True
    assert recdiv.is_divisible("4", 2) is True
    assert recdiv.is_divisible("7", 2) is False
    assert recdiv.is_divisible("12345", 1) is True


def test_trace_matches_hand_chain():
    trace = recdiv.trace("1001", 7)
    assert trace["modulus"] == 7
    assert trace["t"] == 2
    assert trace["divisible"] is True
    assert [s["after"] for s in trace["steps"]] == ["98", "-7"]
    assert trace["terminal_residue"] == 0


def test_trace_without_chain_for_unit_digit_classes():
    trace = recdiv.trace("35", 5)
    assert trace == {"modulus": 5, "divisible": True}


def test_witness_multipliers():
    assert recdiv.closed_form_t(7) == 2
    assert recdiv.closed_form_t(13) == 9
    assert recdiv.inverse_t(49) == 44
    assert recdiv.inverse_t(7, 2) == 3
    assert recdiv.brute_force_t(7) == (2, 1)
    mult = recdiv.multiplier_for(13)
    assert mult["t"] == 9 and mult["k"] == 7
    assert recdiv.multiplier_for(7, 2)["k"] is None


def test_mod_direct_agrees_with_python():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(10**40)
        m = rng.randrange(1, 10**9)
        assert recdiv.mod_direct(str(n), m) == n % m


def test_long_inputs_agree_with_python_integers():
    rng = random.Random(11)
    for m in (3, 7, 13, 49, 101):
        multiple = m * rng.randrange(10**300)
        assert recdiv.is_divisible(str(multiple), m) is True
        assert recdiv.is_divisible(str(multiple + 1), m) is False


def test_classify():
    assert recdiv.classify(7) == "coprime_to_ten"
    assert recdiv.classify(2) == "two"
    assert recdiv.classify(5) == "five"
    assert recdiv.classify(1) == "trivial"
    assert recdiv.classify(10) == "unsupported"


def test_note1():
    assert recdiv.note1_check("12345", 7) == "holds"
    assert recdiv.note1_check("21", 7) == "fails_nonpositive"
    assert recdiv.note1_check("104", 7) == "fails_count"
    survey = recdiv.note1_survey(7, samples=200, digits=3, seed=5)
    assert survey["holds"] + survey["fails_nonpositive"] + survey["fails_count"] == 200
    assert survey == recdiv.note1_survey(7, samples=200, digits=3, seed=5)


def test_primes_and_scan():
    assert recdiv.primes_up_to(10) == [2, 3, 5, 7]
    assert recdiv.exhaustive_verdict_scan(7, 1, 2000) is None
    assert recdiv.exhaustive_verdict_scan(21, 2, 2000) is None


def test_errors_are_value_errors():
    with pytest.raises(recdiv.Error):
        recdiv.is_divisible("99", 6)
    with pytest.raises(ValueError):
        recdiv.is_divisible("12a", 7)
    with pytest.raises(ValueError):
        recdiv.inverse_t(10)
    with pytest.raises(ValueError):
        recdiv.mod_direct("5", 0)


def test_underscores_allowed():
    assert recdiv.is_divisible("1_001", 7) is True
