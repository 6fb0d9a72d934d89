"""Hultman numbers, Stirling numbers of the first kind and the polynomials P_n, Q_n.

The products of two full n-cycles are taken as the multiset
{(1 2 ... n) z : z a full n-cycle}, one element per z, so P_n(1) = (n-1)!.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .cycle_graph import graph_cycle_count
from .parallel import sharded_histogram
from .perm import InvariantError, count_cycles, compose_images, iter_full_cycle_images

DIRECT_MAX_N = 8
PRODUCT_MAX_N = 9
METHODS = ("direct", "product", "formula")


@dataclass(frozen=True)
class HultmanTable:
    n: int
    counts: dict[int, int]
    method: str

    def row(self) -> list[int]:
        """Counts for k = 1..n+1, zeros included."""
        return [self.counts.get(k, 0) for k in range(1, self.n + 2)]

    def __eq__(self, other):
        if not isinstance(other, HultmanTable):
            return NotImplemented
        return self.n == other.n and self.row() == other.row()


@dataclass(frozen=True)
class IntPolynomial:
    """Exact integer polynomial; ``coeffs[e]`` multiplies q**e."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPolynomial":
        if not terms:
            return cls(())
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[e] += v
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self.coeffs and other.coeffs else []
        for a, x in enumerate(self.coeffs):
            if x:
                for b, y in enumerate(other.coeffs):
                    out[a + b] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def exact_div(self, d: int) -> "IntPolynomial":
        for c in self.coeffs:
            if c % d:
                raise InvariantError(f"coefficient {c} not divisible by {d}")
        return IntPolynomial(tuple(c // d for c in self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(e * c for e, c in enumerate(self.coeffs) if e))

    def substitute_power(self, power: int, shift: int = 0) -> "IntPolynomial":
        """Return q**shift * self(q**power)."""
        return IntPolynomial.from_terms({e * power + shift: c for e, c in enumerate(self.coeffs) if c})

    def nonzero(self) -> list[int]:
        return [c for c in self.coeffs if c]


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] + (n - 1) * (prev[k] if k < n else 0)
    return tuple(row)


def stirling_first_unsigned(n: int, k: int) -> int:
    """Number of n-permutations with exactly k cycles."""
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    for m in range(n + 1):  # fill the cache bottom-up to keep recursion shallow
        _stirling_row(m)
    return _stirling_row(n)[k]


def _check_range(n: int, hi: int, what: str) -> None:
    if not 1 <= n <= hi:
        raise ValueError(f"{what} supports 1 <= n <= {hi}, got {n}")


def _direct_shard(n: int, first: int) -> Counter:
    hist = Counter()
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in itertools.permutations(rest):
        hist[graph_cycle_count((first, *tail))] += 1
    return hist


def hultman_direct(n: int, jobs: int = 1) -> HultmanTable:
    """Histogram of c(G(p)) over all n-permutations."""
    _check_range(n, DIRECT_MAX_N, "hultman_direct")
    hist = sharded_histogram(_direct_shard, n, range(1, n + 1), jobs)
    return HultmanTable(n, dict(sorted(hist.items())), "direct")


def product_cycle_histogram(m: int, second: int | None = None) -> Counter:
    """Histogram of cycle counts of (1 2 ... m) z over full m-cycles z."""
    canon = tuple(range(2, m + 1)) + (1,)
    hist = Counter()
    for z in iter_full_cycle_images(m, second):
        hist[count_cycles(compose_images(canon, z))] += 1
    return hist


def product_histogram(m: int, jobs: int = 1) -> Counter:
    if m <= 2:
        return product_cycle_histogram(m)
    return sharded_histogram(product_cycle_histogram, m, range(2, m + 1), jobs)


def hultman_product(n: int, jobs: int = 1) -> HultmanTable:
    """Histogram over (n+1)-cycles q of the cycle count of (1 2 ... n+1) q."""
    _check_range(n, PRODUCT_MAX_N, "hultman_product")
    hist = product_histogram(n + 1, jobs)
    return HultmanTable(n, dict(sorted(hist.items())), "product")


def hultman_formula(n: int, k: int) -> int:
    if n < 1 or not 1 <= k <= n + 1:
        raise ValueError(f"need n >= 1 and 1 <= k <= n+1, got n={n}, k={k}")
    if (n - k) % 2 == 0:
        return 0
    num = stirling_first_unsigned(n + 2, k)
    den = math.comb(n + 2, 2)
    q, r = divmod(num, den)
    if r:
        raise InvariantError(f"c({n + 2},{k}) = {num} is not divisible by C({n + 2},2) = {den}")
    return q


def hultman_formula_table(n: int) -> HultmanTable:
    counts = {k: hultman_formula(n, k) for k in range(1, n + 2)}
    return HultmanTable(n, {k: v for k, v in counts.items() if v}, "formula")


def hultman_table(n: int, method: str = "formula", jobs: int = 1) -> HultmanTable:
    if method == "direct":
        return hultman_direct(n, jobs)
    if method == "product":
        return hultman_product(n, jobs)
    if method == "formula":
        return hultman_formula_table(n)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")


def pn_poly(n: int) -> tuple[IntPolynomial, int]:
    """Stirling-coefficient numerator of P_n and its divisor C(n+1, 2)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    terms = {}
    for i in range((n - 1) // 2 + 1):
        terms[n - 2 * i] = stirling_first_unsigned(n + 1, n - 2 * i)
    return IntPolynomial.from_terms(terms), math.comb(n + 1, 2)


def pn_brute(n: int, jobs: int = 1) -> tuple[IntPolynomial, int]:
    if not 2 <= n <= PRODUCT_MAX_N:
        raise ValueError(f"pn_brute supports 2 <= n <= {PRODUCT_MAX_N}, got {n}")
    return IntPolynomial.from_terms(dict(product_histogram(n, jobs))), 1


def qn_poly(n: int) -> IntPolynomial:
    """P_n with exponents c compressed to c/2 (n even) or (c+1)/2 (n odd)."""
    num, den = pn_poly(n)
    pn = num.exact_div(den)
    terms = {}
    for e, c in enumerate(pn.coeffs):
        if c:
            terms[(e + (n % 2)) // 2] = c
    return IntPolynomial.from_terms(terms)


def _nonzero_support(coeffs: Sequence[int]) -> list[int]:
    idx = [i for i, c in enumerate(coeffs) if c]
    if not idx:
        return []
    if idx[-1] - idx[0] + 1 != len(idx):
        raise ValueError(f"nonzero support of {list(coeffs)} has internal gaps")
    return list(coeffs[idx[0] : idx[-1] + 1])


def log_concave_check(coeffs: Sequence[int]) -> bool:
    if not coeffs:
        raise ValueError("empty coefficient sequence")
    c = _nonzero_support(coeffs)
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def is_unimodal(coeffs: Sequence[int]) -> bool:
    c = _nonzero_support(coeffs)
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i == len(c) - 1 if c else True
