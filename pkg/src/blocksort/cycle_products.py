"""Same-cycle probabilities for products of two random full cycles, and the
insertion of a new maximum element into a full cycle.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .perm import (
    InvariantError,
    Permutation,
    canonical_cycle,
    compose,
    count_cycles,
    compose_images,
    cycle_count,
    iter_full_cycle_images,
    same_cycle,
)

EXHAUSTIVE_MAX_H = 7
REDUCED_MAX_H = 10
MC_BATCH = 50_000


@dataclass(frozen=True)
class SameCycleEstimate:
    h: int
    i: int
    j: int
    value: Fraction | float
    method: str
    stderr: float | None = None
    trials: int | None = None
    seed: int | None = None
    jobs: int | None = None


def stanley_probability(h: int) -> Fraction:
    """Probability that two fixed elements share a cycle of a product of two random h-cycles."""
    if h < 2:
        raise ValueError(f"h must be at least 2, got {h}")
    if h % 2:
        return Fraction(1, 2)
    return Fraction(1, 2) - Fraction(2, (h - 1) * (h + 2))


def _check_pair(h: int, i: int, j: int) -> None:
    if not (1 <= i <= h and 1 <= j <= h) or i == j:
        raise ValueError(f"need distinct i, j in 1..{h}, got {i}, {j}")


def _full_cycle_array(h: int) -> np.ndarray:
    return np.array(list(iter_full_cycle_images(h)), dtype=np.int16)


def _min_labels(prod: np.ndarray) -> np.ndarray:
    """Label every element of each row's permutation by the minimum of its cycle."""
    h = prod.shape[-1]
    cur = np.broadcast_to(np.arange(1, h + 1, dtype=prod.dtype), prod.shape).copy()
    label = cur.copy()
    for _ in range(h - 1):
        cur = np.take_along_axis(prod, cur - 1, axis=-1)
        np.minimum(label, cur, out=label)
    return label


def same_cycle_pair_counts(h: int) -> dict[tuple[int, int], int]:
    """For each i < j, the number of ordered pairs (x, y) of h-cycles with i, j in one cycle of xy."""
    if not 2 <= h <= EXHAUSTIVE_MAX_H:
        raise ValueError(f"all-pairs enumeration supports 2 <= h <= {EXHAUSTIVE_MAX_H}, got {h}")
    cycles = _full_cycle_array(h)
    counts = {(i, j): 0 for i in range(1, h + 1) for j in range(i + 1, h + 1)}
    for x in cycles:
        # (x then y)(v) = y(x(v)) for every y at once
        prod = cycles[:, x - 1]
        label = _min_labels(prod)
        for i, j in counts:
            counts[i, j] += int(np.count_nonzero(label[:, i - 1] == label[:, j - 1]))
    return counts


def same_cycle_exhaustive(h: int, i: int, j: int) -> Fraction:
    _check_pair(h, i, j)
    counts = same_cycle_pair_counts(h)
    total = math.factorial(h - 1) ** 2
    return Fraction(counts[min(i, j), max(i, j)], total)


def same_cycle_exhaustive_reduced(h: int) -> Fraction:
    """Fix x = (1 2 ... h) and average the fraction of pairs sharing a cycle over all z."""
    if not 2 <= h <= REDUCED_MAX_H:
        raise ValueError(f"reduced enumeration supports 2 <= h <= {REDUCED_MAX_H}, got {h}")
    canon = canonical_cycle(h).image
    together = 0
    count = 0
    for z in iter_full_cycle_images(h):
        prod = compose_images(canon, z)
        seen = bytearray(h + 1)
        for start in range(1, h + 1):
            if seen[start]:
                continue
            size = 0
            v = start
            while not seen[v]:
                seen[v] = 1
                size += 1
                v = prod[v - 1]
            together += size * (size - 1) // 2
        count += 1
    return Fraction(together, count * math.comb(h, 2))


def random_full_cycles(h: int, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` uniform full h-cycles as rows of 1-based images."""
    tails = rng.permuted(np.tile(np.arange(2, h + 1, dtype=np.int32), (size, 1)), axis=1)
    order = np.hstack([np.ones((size, 1), dtype=np.int32), tails])
    image = np.empty_like(order)
    rows = np.arange(size)[:, None]
    image[rows, order - 1] = np.roll(order, -1, axis=1)
    return image


def _mc_worker(h: int, i: int, j: int, trials: int, seed_seq: np.random.SeedSequence) -> int:
    rng = np.random.default_rng(seed_seq)
    hits = 0
    done = 0
    while done < trials:
        size = min(MC_BATCH, trials - done)
        x = random_full_cycles(h, size, rng)
        y = random_full_cycles(h, size, rng)
        prod = np.take_along_axis(y, x - 1, axis=1)
        cur = np.full(size, i, dtype=prod.dtype)
        hit = np.zeros(size, dtype=bool)
        rows = np.arange(size)
        for _ in range(h - 1):
            cur = prod[rows, cur - 1]
            hit |= cur == j
        hits += int(np.count_nonzero(hit))
        done += size
    return hits


def same_cycle_montecarlo(h: int, i: int, j: int, trials: int, seed: int, jobs: int = 1) -> SameCycleEstimate:
    """Estimate the same-cycle probability with ``trials`` random pairs of h-cycles.

    Worker w draws from the w-th child of ``SeedSequence(seed)``; the result
    is reproducible for a fixed (seed, jobs).
    """
    if h < 2:
        raise ValueError(f"h must be at least 2, got {h}")
    _check_pair(h, i, j)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    children = np.random.SeedSequence(seed).spawn(jobs)
    shares = [trials // jobs + (1 if w < trials % jobs else 0) for w in range(jobs)]
    if jobs == 1:
        hits = _mc_worker(h, i, j, trials, children[0])
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = sum(pool.map(_mc_worker, [h] * jobs, [i] * jobs, [j] * jobs, shares, children))
    p = hits / trials
    stderr = math.sqrt(p * (1 - p) / trials)
    return SameCycleEstimate(h, i, j, p, "montecarlo", stderr, trials, seed, jobs)


def _require_full_cycle(z: Permutation) -> None:
    if cycle_count(z) != 1:
        raise ValueError(f"{z} is not a full cycle")


def extend_cycle(z: Permutation, a: int) -> Permutation:
    """Insert n+1 into the full cycle z right after a."""
    _require_full_cycle(z)
    n = z.n
    if not 1 <= a <= n:
        raise ValueError(f"a must lie in 1..{n}, got {a}")
    image = list(z.image) + [z(a)]
    image[a - 1] = n + 1
    return Permutation._trusted(tuple(image))


def remove_max_from_cycle(z: Permutation) -> Permutation:
    """Splice the largest element out of a full cycle (inverse of extend_cycle)."""
    _require_full_cycle(z)
    n1 = z.n
    if n1 < 2:
        raise ValueError("cannot remove an element from a 1-cycle")
    image = list(z.image[:-1])
    a = z.image.index(n1) + 1
    image[a - 1] = z(n1)
    return Permutation._trusted(tuple(image))


def predicted_delta(z: Permutation, a: int) -> int:
    """Change in cycle count predicted by the three-case analysis."""
    if a == 1:
        return 1
    s = compose(canonical_cycle(z.n), z)
    u, w = a - 1, z(1)
    together = u == w or same_cycle(s, u, w)
    return 1 if together else -1


def proposition_delta(z: Permutation, a: int) -> int:
    """Observed cycle-count change of (1 .. n) z when n+1 is inserted after a.

    Raises InvariantError if it contradicts :func:`predicted_delta`.
    """
    n = z.n
    s = compose(canonical_cycle(n), z)
    s_ext = compose(canonical_cycle(n + 1), extend_cycle(z, a))
    delta = cycle_count(s_ext) - cycle_count(s)
    expected = predicted_delta(z, a)
    if delta != expected:
        raise InvariantError(f"z={z}, a={a}: observed delta {delta}, case analysis predicts {expected}")
    return delta


def proposition_exceptions(n: int) -> tuple[int, int]:
    """(checked, exceptions) over every full n-cycle z and every a."""
    checked = bad = 0
    for image in iter_full_cycle_images(n):
        z = Permutation._trusted(image)
        for a in range(1, n + 1):
            checked += 1
            try:
                proposition_delta(z, a)
            except InvariantError:
                bad += 1
    return checked, bad


def extended_cycle_mean(n: int) -> Fraction:
    """Mean cycle count of (1 .. n+1) z' over every insertion (z, a)."""
    canon = canonical_cycle(n + 1).image
    total = count = 0
    for image in iter_full_cycle_images(n):
        z = Permutation._trusted(image)
        for a in range(1, n + 1):
            total += count_cycles(compose_images(canon, extend_cycle(z, a).image))
            count += 1
    return Fraction(total, count)


def pair_fraction_table(h: int) -> dict[tuple[int, int], Fraction]:
    total = math.factorial(h - 1) ** 2
    return {pair: Fraction(c, total) for pair, c in same_cycle_pair_counts(h).items()}

