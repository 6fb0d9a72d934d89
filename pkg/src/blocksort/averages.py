"""Exact average cycle counts of products of two full cycles and average sorting distances."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .cycle_graph import graph_cycle_count
from .hultman import IntPolynomial, hultman_formula, product_histogram

A_BRUTE_MAX_N = 10
B_BRUTE_MAX_N = 8


def harmonic(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def a_closed(n: int) -> Fraction:
    """Average number of cycles of (1 2 ... n) z over full n-cycles z."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction(1, (n - 1) // 2 + 1) + harmonic(n - 1)


def b_closed(n: int) -> Fraction:
    """Average block-interchange distance over all n-permutations."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return (n - Fraction(1, n // 2 + 1) - (harmonic(n) - 1)) / 2


def a_brute(n: int, jobs: int = 1) -> Fraction:
    if not 2 <= n <= A_BRUTE_MAX_N:
        raise ValueError(f"a_brute supports 2 <= n <= {A_BRUTE_MAX_N}, got {n}")
    hist = product_histogram(n, jobs)
    return Fraction(sum(c * m for c, m in hist.items()), sum(hist.values()))


def b_brute(n: int) -> Fraction:
    if not 2 <= n <= B_BRUTE_MAX_N:
        raise ValueError(f"b_brute supports 2 <= n <= {B_BRUTE_MAX_N}, got {n}")
    total = 0
    for image in itertools.permutations(range(1, n + 1)):
        total += n + 1 - graph_cycle_count(image)
    # each term is twice a distance
    return Fraction(total, 2 * math.factorial(n))


def lemma_odd_increment(m: int) -> Fraction:
    """a_{2m+2} - a_{2m+1}."""
    return Fraction(1, 2 * m + 1)


def lemma_even_increment(m: int) -> Fraction:
    """a_{2m+1} - a_{2m}, in the form consistent with the closed formula."""
    return Fraction(1, 2 * m) - Fraction(1, m * (m + 1))


def lemma_even_increment_printed(m: int) -> Fraction:
    """The other displayed form m / (2(m+1)(m+2)); disagrees with the closed formula."""
    return Fraction(m, 2 * (m + 1) * (m + 2))


def recurrence_check(m: int) -> tuple[Fraction, Fraction | None]:
    """(a_{2m+2} - a_{2m+1}, a_{2m+1} - a_{2m}); the second is None at m = 0."""
    if m < 0:
        raise ValueError("m must be non-negative")
    first = a_closed(2 * m + 2) - a_closed(2 * m + 1)
    second = a_closed(2 * m + 1) - a_closed(2 * m) if m >= 1 else None
    return first, second


def rising_factorial_poly(n: int) -> IntPolynomial:
    """x (x+1) ... (x+n-1), expanded."""
    poly = IntPolynomial((1,))
    for j in range(n):
        poly = poly * IntPolynomial((j, 1))
    return poly


def a_via_stirling_poly(n: int) -> Fraction:
    """a_n from derivatives of x(x+1)...(x+n) at 1 and -1.

    F'(1) + F'(-1) keeps twice the odd-k part of sum k c(n+1, k) and
    F'(1) - F'(-1) twice the even-k part; P_n uses only k with k = n mod 2.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    f = rising_factorial_poly(n + 1)
    df = f.derivative()
    sign = 1 if n % 2 else -1
    weighted = (df(1) + sign * df(-1)) // 2
    count = (f(1) + sign * f(-1)) // 2
    return Fraction(weighted, count)


def a_from_hultman(n: int) -> Fraction:
    """Mean k weighted by the Hultman numbers of degree n-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    row = {k: hultman_formula(n - 1, k) for k in range(1, n + 1)}
    return Fraction(sum(k * v for k, v in row.items()), math.factorial(n - 1))
