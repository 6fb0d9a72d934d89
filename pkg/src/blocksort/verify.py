"""Reproduction checks run by ``blocksort verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`; ``level`` scales the enumeration
bounds ("smoke" is seconds, "desk" is the full acceptance run, "deep" pushes
each enumeration one degree further where that stays feasible).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import averages, block_sorter, cycle_products, hultman
from .cycle_graph import bi_distance, graph_cycle_count
from .perm import Permutation, all_permutations, random_permutation, rank

LEVELS = ("smoke", "desk", "deep")
DEFAULT_SEED = 20080415
MC_SIGMAS = 4


def default_seed() -> int:
    return int(os.environ.get("BLOCKSORT_SEED", DEFAULT_SEED))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass(frozen=True)
class Bounds:
    bfs_n: int
    greedy_n: int
    greedy_random: int
    hultman_all_n: int
    hultman_product_n: int
    row_n: int
    pn_n: int
    pairs_h: int
    reduced_h: int
    mc_trials: int
    prop_n: int
    a_brute_n: int
    b_brute_n: int
    stirling_n: int
    lemma_m: int
    structure_n: int


BOUNDS = {
    "smoke": Bounds(5, 5, 200, 5, 6, 12, 5, 5, 7, 20_000, 5, 6, 5, 12, 10, 15),
    "desk": Bounds(6, 6, 10_000, 7, 9, 25, 8, 7, 10, 1_000_000, 7, 9, 7, 20, 40, 40),
    "deep": Bounds(7, 7, 20_000, 8, 9, 40, 9, 7, 10, 4_000_000, 8, 10, 8, 40, 100, 80),
}


def check_bfs_oracle(b: Bounds, seed: int, jobs: int) -> CheckResult:
    checked = 0
    for n in range(2, b.bfs_n + 1):
        dist = block_sorter.bfs_distances(n)
        for p in all_permutations(n):
            if dist[rank(p.image)] != bi_distance(p):
                return CheckResult("bfs_oracle", False, f"mismatch at {p}")
            checked += 1
    return CheckResult("bfs_oracle", True, f"{checked} permutations, 2 <= n <= {b.bfs_n}")


def _certificate_ok(p: Permutation) -> bool:
    cert = block_sorter.greedy_sort(p)
    return len(cert.moves) == bi_distance(p) == cert.claimed_distance and cert.replay().is_identity()


def check_greedy(b: Bounds, seed: int, jobs: int) -> CheckResult:
    exhaustive = 0
    for n in range(1, b.greedy_n + 1):
        for p in all_permutations(n):
            if not _certificate_ok(p):
                return CheckResult("greedy_certificates", False, f"bad certificate for {p}")
            exhaustive += 1
    rng = np.random.default_rng(seed)
    for _ in range(b.greedy_random):
        p = random_permutation(int(rng.integers(10, 51)), rng)
        if not _certificate_ok(p):
            return CheckResult("greedy_certificates", False, f"bad certificate for {p}")
    return CheckResult(
        "greedy_certificates",
        True,
        f"{exhaustive} exhaustive (n <= {b.greedy_n}) + {b.greedy_random} random (10 <= n <= 50, seed {seed})",
    )


def check_hultman(b: Bounds, seed: int, jobs: int) -> CheckResult:
    for n in range(1, b.hultman_all_n + 1):
        direct = hultman.hultman_direct(n, jobs)
        product = hultman.hultman_product(n, jobs)
        formula = hultman.hultman_formula_table(n)
        if not direct == product == formula:
            return CheckResult("hultman_triple", False, f"disagreement at n={n}")
    for n in range(b.hultman_all_n + 1, b.hultman_product_n + 1):
        if hultman.hultman_product(n, jobs) != hultman.hultman_formula_table(n):
            return CheckResult("hultman_triple", False, f"product != formula at n={n}")
    for n in range(1, b.row_n + 1):
        row = [hultman.hultman_formula(n, k) for k in range(1, n + 2)]
        if sum(row) != math.factorial(n):
            return CheckResult("hultman_triple", False, f"row sum at n={n}")
        for k, v in enumerate(row, 1):
            if (v == 0) != ((n - k) % 2 == 0):
                return CheckResult("hultman_triple", False, f"parity pattern at n={n}, k={k}")
    return CheckResult(
        "hultman_triple",
        True,
        f"direct=product=formula n <= {b.hultman_all_n}; product=formula n <= {b.hultman_product_n}; "
        f"row sums and parity n <= {b.row_n}",
    )


def check_pn(b: Bounds, seed: int, jobs: int) -> CheckResult:
    for n in range(2, b.pn_n + 1):
        brute, _ = hultman.pn_brute(n, jobs)
        num, den = hultman.pn_poly(n)
        if brute * den != num:
            return CheckResult("stirling_polynomial", False, f"mismatch at n={n}")
    return CheckResult("stirling_polynomial", True, f"2 <= n <= {b.pn_n}")


def check_stanley(b: Bounds, seed: int, jobs: int) -> CheckResult:
    sp = cycle_products.stanley_probability
    if sp(4) != Fraction(7, 18) or sp(6) != Fraction(9, 20):
        return CheckResult("same_cycle_probability", False, "closed form p(4), p(6)")
    for h in range(2, b.pairs_h + 1):
        table = cycle_products.pair_fraction_table(h)
        if any(v != sp(h) for v in table.values()):
            return CheckResult("same_cycle_probability", False, f"all-pairs mismatch at h={h}")
    for h in range(2, b.reduced_h + 1):
        if cycle_products.same_cycle_exhaustive_reduced(h) != sp(h):
            return CheckResult("same_cycle_probability", False, f"reduced mismatch at h={h}")
    notes = []
    for h in (20, 21):
        s = seed + h
        est = cycle_products.same_cycle_montecarlo(h, 1, 2, b.mc_trials, s, jobs)
        err = abs(est.value - float(sp(h)))
        notes.append(f"h={h} seed={s} est={est.value:.6f} err={err:.2e} se={est.stderr:.2e}")
        if err > MC_SIGMAS * est.stderr:
            return CheckResult("same_cycle_probability", False, "; ".join(notes))
    return CheckResult(
        "same_cycle_probability",
        True,
        f"all pairs h <= {b.pairs_h}, reduced h <= {b.reduced_h}, {b.mc_trials} trials, jobs={jobs}: " + "; ".join(notes),
    )


def check_insertion(b: Bounds, seed: int, jobs: int) -> CheckResult:
    total = 0
    for n in range(1, b.prop_n + 1):
        checked, bad = cycle_products.proposition_exceptions(n)
        total += checked
        if bad:
            return CheckResult("insertion_delta", False, f"{bad} exceptions at n={n}")
    return CheckResult("insertion_delta", True, f"{total} (z, a) pairs, n <= {b.prop_n}, zero exceptions")


def check_averages(b: Bounds, seed: int, jobs: int) -> CheckResult:
    for n in range(2, b.a_brute_n + 1):
        if averages.a_brute(n, jobs) != averages.a_closed(n):
            return CheckResult("average_formulas", False, f"a_brute at n={n}")
    for n in range(2, b.b_brute_n + 1):
        if averages.b_brute(n) != averages.b_closed(n):
            return CheckResult("average_formulas", False, f"b_brute at n={n}")
    for n in range(2, b.stirling_n + 1):
        if averages.a_via_stirling_poly(n) != averages.a_closed(n):
            return CheckResult("average_formulas", False, f"stirling derivative route at n={n}")
    for m in range(0, b.lemma_m + 1):
        first, second = averages.recurrence_check(m)
        if first != averages.lemma_odd_increment(m):
            return CheckResult("average_formulas", False, f"odd increment at m={m}")
        if m >= 1 and second != averages.lemma_even_increment(m):
            return CheckResult("average_formulas", False, f"even increment at m={m}")
    return CheckResult(
        "average_formulas",
        True,
        f"a brute n <= {b.a_brute_n}, b brute n <= {b.b_brute_n}, derivative route n <= {b.stirling_n}, "
        f"increments m <= {b.lemma_m}",
    )


def check_structure(b: Bounds, seed: int, jobs: int) -> CheckResult:
    for n in range(1, b.structure_n + 1):
        q = hultman.qn_poly(n).coeffs
        if not (hultman.log_concave_check(q) and hultman.is_unimodal(q)):
            return CheckResult("q_polynomial_structure", False, f"Q_{n} not log-concave/unimodal")
        for k in range(1, n + 2):
            if (n - k) % 2 and hultman.stirling_first_unsigned(n + 2, k) % math.comb(n + 2, 2):
                return CheckResult("q_polynomial_structure", False, f"divisibility at n={n}, k={k}")
    return CheckResult("q_polynomial_structure", True, f"n <= {b.structure_n}")


CHECKS: list[Callable[[Bounds, int, int], CheckResult]] = [
    check_bfs_oracle,
    check_greedy,
    check_hultman,
    check_pn,
    check_stanley,
    check_insertion,
    check_averages,
    check_structure,
]


def run_checks(level: str = "desk", seed: int | None = None, jobs: int = 1) -> list[CheckResult]:
    if level not in BOUNDS:
        raise ValueError(f"unknown level {level!r}; choose from {', '.join(LEVELS)}")
    seed = default_seed() if seed is None else seed
    return [check(BOUNDS[level], seed, jobs) for check in CHECKS]
