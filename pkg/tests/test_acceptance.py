"""Exit criteria, run at full desk scale.  One PASS/FAIL line per criterion (use -s to see them)."""

import pytest

from blocksort import verify

SEED = verify.DEFAULT_SEED
DESK = verify.BOUNDS["desk"]

CRITERIA = [
    ("1 distance formula vs BFS, all n! for 2 <= n <= 6", verify.check_bfs_oracle),
    ("2 greedy certificates, exhaustive n <= 6 + 10000 random n in 10..50", verify.check_greedy),
    ("3 Hultman direct = product = formula, row sums and parity", verify.check_hultman),
    ("4 brute P_n times C(n+1,2) = Stirling polynomial, 2 <= n <= 8", verify.check_pn),
    ("5 same-cycle probability exact + Monte Carlo within 4 SE", verify.check_stanley),
    ("6 insertion delta case analysis, n <= 7", verify.check_insertion),
    ("7 average cycle count / distance formulas and increments", verify.check_averages),
    ("8 Q_n log-concave, unimodal; Stirling divisibility, n <= 40", verify.check_structure),
]


def test_desk_bounds_are_the_stated_ones():
    assert (DESK.bfs_n, DESK.greedy_n, DESK.greedy_random) == (6, 6, 10_000)
    assert (DESK.hultman_all_n, DESK.hultman_product_n, DESK.row_n) == (7, 9, 25)
    assert DESK.pn_n == 8
    assert (DESK.pairs_h, DESK.reduced_h, DESK.mc_trials) == (7, 10, 1_000_000)
    assert verify.MC_SIGMAS == 4
    assert DESK.prop_n == 7
    assert (DESK.a_brute_n, DESK.b_brute_n, DESK.stirling_n, DESK.lemma_m) == (9, 7, 20, 40)
    assert DESK.structure_n == 40


@pytest.mark.parametrize("label,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check):
    result = check(DESK, SEED, 1)
    print(f"\n[{'PASS' if result.passed else 'FAIL'}] criterion {label} -- {result.detail}")
    assert result.passed, result.detail
