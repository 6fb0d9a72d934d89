from fractions import Fraction

import pytest

from blocksort.averages import (
    a_brute,
    a_closed,
    a_from_hultman,
    a_via_stirling_poly,
    b_brute,
    b_closed,
    harmonic,
    lemma_even_increment,
    lemma_even_increment_printed,
    lemma_odd_increment,
    recurrence_check,
    rising_factorial_poly,
)
from blocksort.perm import canonical_cycle, compose, cycle_count, enumerate_full_cycles


def test_harmonic():
    assert harmonic(0) == 0
    assert harmonic(1) == 1
    assert harmonic(4) == Fraction(25, 12)


def test_a_closed_values():
    assert a_closed(1) == 1
    assert a_closed(2) == 2
    assert a_closed(3) == 2
    assert a_closed(4) == Fraction(7, 3)


def test_b_closed_values():
    assert b_closed(1) == 0
    assert b_closed(2) == Fraction(1, 2)
    assert b_closed(3) == Fraction(5, 6)


def test_a_brute_small():
    assert a_brute(2) == 2
    assert a_brute(3) == 2
    # independent recount through the Permutation API
    zs = list(enumerate_full_cycles(5))
    assert a_brute(5) == Fraction(sum(cycle_count(compose(canonical_cycle(5), z)) for z in zs), len(zs))


@pytest.mark.parametrize("n", range(2, 10))
def test_a_brute_matches_closed(n):
    assert a_brute(n) == a_closed(n)


@pytest.mark.parametrize("n", range(2, 8))
def test_b_brute_matches_closed(n):
    assert b_brute(n) == b_closed(n)


def test_b_brute_small():
    assert b_brute(2) == Fraction(1, 2)
    assert b_brute(3) == Fraction(5, 6)
    with pytest.raises(ValueError):
        b_brute(9)


def test_correction_term_and_distance_relation():
    for n in range(1, 101):
        assert a_closed(n) - harmonic(n - 1) == Fraction(1, (n - 1) // 2 + 1)
        assert b_closed(n) == (n + 1 - a_closed(n + 1)) / 2


def test_recurrence_examples():
    assert recurrence_check(0) == (1, None)
    first, second = recurrence_check(1)
    assert second == 0
    assert recurrence_check(2)[0] == Fraction(1, 5)


def test_recurrences_hold():
    for m in range(0, 41):
        first, second = recurrence_check(m)
        assert first == lemma_odd_increment(m)
        if m:
            assert second == lemma_even_increment(m)


def test_printed_even_increment_is_inconsistent():
    assert lemma_even_increment_printed(1) == Fraction(1, 12)
    assert recurrence_check(1)[1] != lemma_even_increment_printed(1)


def test_stirling_derivative_example():
    f = rising_factorial_poly(4)
    assert f.coeffs == (0, 6, 11, 6, 1)
    df = f.derivative()
    assert (df(1), df(-1)) == (50, -2)
    assert a_via_stirling_poly(3) == 2
    assert a_via_stirling_poly(2) == 2


def test_three_pipelines_agree():
    for n in range(2, 21):
        assert a_via_stirling_poly(n) == a_closed(n)
    for n in range(2, 26):
        assert a_from_hultman(n) == a_closed(n)
