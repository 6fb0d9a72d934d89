"""Permutations of {1..n} in one-line notation.

Composition is left to right: ``compose(p, q)(i) == q(p(i))``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np


class InvariantError(RuntimeError):
    """A mathematical invariant that must always hold was observed to fail."""


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if not image:
            raise ValueError("permutation degree must be at least 1")
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{list(image)} is not a bijection on 1..{len(image)}")

    @classmethod
    def _trusted(cls, image: tuple[int, ...]) -> "Permutation":
        # skips validation; for images produced by this package
        p = object.__new__(cls)
        object.__setattr__(p, "image", image)
        return p

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"3 4 1 7 5 6 2"`` or the compact form ``"3417562"`` (n <= 9)."""
        text = text.strip()
        tokens = re.split(r"[\s,]+", text) if re.search(r"[\s,]", text) else list(text)
        values = []
        for tok in tokens:
            if not tok.isdigit():
                raise ValueError(f"invalid permutation token {tok!r}")
            values.append(int(tok))
        if not values:
            raise ValueError("empty permutation")
        n = len(values)
        seen = set()
        for tok, v in zip(tokens, values):
            if not 1 <= v <= n:
                raise ValueError(f"invalid permutation token {tok!r}: value out of range 1..{n}")
            if v in seen:
                raise ValueError(f"invalid permutation token {tok!r}: repeated value")
            seen.add(v)
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __len__(self) -> int:
        return len(self.image)

    def __str__(self) -> str:
        return " ".join(map(str, self.image))

    def compact(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.image))
        return str(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.image, 1))


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles opened at their minimum, sorted by minimum."""

    cycles: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.cycles)

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation._trusted(tuple(range(1, n + 1)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return "p then q"."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    return Permutation._trusted(compose_images(p.image, q.image))


def compose_images(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    return tuple(q[v - 1] for v in p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.image, 1):
        inv[v - 1] = i
    return Permutation._trusted(tuple(inv))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        v = start
        while not seen[v]:
            seen[v] = True
            cycle.append(v)
            v = p.image[v - 1]
        cycles.append(tuple(cycle))
    return CycleDecomposition(tuple(cycles))


def count_cycles(image: Sequence[int]) -> int:
    """Number of cycles of a 1-based image sequence."""
    n = len(image)
    seen = bytearray(n + 1)
    count = 0
    for start in range(1, n + 1):
        if seen[start]:
            continue
        count += 1
        v = start
        while not seen[v]:
            seen[v] = 1
            v = image[v - 1]
    return count


def cycle_labels(image: Sequence[int]) -> list[int]:
    """labels[v] is the index of the cycle containing v (labels[0] unused)."""
    n = len(image)
    labels = [-1] * (n + 1)
    count = 0
    for start in range(1, n + 1):
        if labels[start] >= 0:
            continue
        v = start
        while labels[v] < 0:
            labels[v] = count
            v = image[v - 1]
        count += 1
    return labels


def cycle_count(p: Permutation) -> int:
    return count_cycles(p.image)


def same_cycle(p: Permutation, i: int, j: int) -> bool:
    if not (1 <= i <= p.n and 1 <= j <= p.n):
        raise ValueError(f"values must lie in 1..{p.n}, got {i}, {j}")
    if i == j:
        raise ValueError("i and j must be distinct")
    v = p.image[i - 1]
    while v != i:
        if v == j:
            return True
        v = p.image[v - 1]
    return False


def canonical_cycle(n: int) -> Permutation:
    """The cycle (1 2 ... n)."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation._trusted(tuple(range(2, n + 1)) + (1,))


def cycle_from_order(order: Sequence[int]) -> tuple[int, ...]:
    """Image of the full cycle visiting ``order`` in sequence."""
    n = len(order)
    image = [0] * n
    for t in range(n):
        image[order[t] - 1] = order[(t + 1) % n]
    return tuple(image)


def iter_full_cycle_images(n: int, second: int | None = None) -> Iterator[tuple[int, ...]]:
    """Images of all n-cycles, ordered by the arrangement of 2..n after 1.

    ``second`` restricts to cycles with 1 -> second (used for sharding).
    """
    if n < 1:
        raise ValueError("degree must be at least 1")
    if n == 1:
        yield (1,)
        return
    rest = list(range(2, n + 1))
    if second is None:
        heads = rest
    else:
        heads = [second]
    for head in heads:
        others = [v for v in rest if v != head]
        for tail in itertools.permutations(others):
            yield cycle_from_order((1, head) + tail)


def enumerate_full_cycles(n: int) -> Iterator[Permutation]:
    for image in iter_full_cycle_images(n):
        yield Permutation._trusted(image)


def random_full_cycle(n: int, rng: np.random.Generator) -> Permutation:
    if n < 2:
        raise ValueError("full cycles are sampled for n >= 2")
    tail = rng.permutation(np.arange(2, n + 1)).tolist()
    return Permutation._trusted(cycle_from_order([1] + tail))


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    return Permutation._trusted(tuple((rng.permutation(n) + 1).tolist()))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations in lexicographic order."""
    for image in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(image)


def rank(image: Sequence[int]) -> int:
    """Lexicographic rank via the factorial number system (Lehmer code)."""
    n = len(image)
    r = 0
    for i in range(n):
        smaller = 0
        vi = image[i]
        for j in range(i + 1, n):
            if image[j] < vi:
                smaller += 1
        r = r * (n - i) + smaller
    return r


def unrank(r: int, n: int) -> tuple[int, ...]:
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for degree {n}")
    digits = []
    for base in range(1, n + 1):
        digits.append(r % base)
        r //= base
    pool = list(range(1, n + 1))
    return tuple(pool.pop(d) for d in reversed(digits))
