import pytest
from hypothesis import given

from blocksort.block_sorter import all_block_interchanges, apply_block_interchange
from blocksort.cycle_graph import (
    alternating_cycle_count,
    bi_distance,
    build_cycle_graph,
    graph_export,
)
from blocksort.perm import Permutation, all_permutations, identity

from conftest import permutations


def G(text):
    return build_cycle_graph(Permutation.parse(text))


def explicit_alternating_cycles(p):
    """Walk the explicit two-colored edge lists, independent of the successor shortcut."""
    seq = [0, *p.image]
    m = p.n + 1
    black = {seq[i]: seq[i - 1] for i in range(m)}
    gray = {v: (v + 1) % m for v in range(m)}
    assert len(black) == len(gray) == m
    used = set()
    count = 0
    for start in range(m):
        if start in used:
            continue
        count += 1
        v = start
        while v not in used:
            used.add(v)
            v = gray[black[v]]
    return count


def test_successor_identity():
    assert G("1234").successor == (0, 1, 2, 3, 4)


def test_successor_figure_example():
    succ = G("4213").successor
    assert (succ[0], succ[4], succ[1], succ[3], succ[2]) == (4, 1, 3, 2, 0)


def test_alternating_cycle_counts():
    assert alternating_cycle_count(G("1234")) == 5
    assert alternating_cycle_count(G("4213")) == 1
    for n in range(1, 9):
        assert alternating_cycle_count(build_cycle_graph(identity(n))) == n + 1


def test_bi_distance_examples():
    assert bi_distance(identity(7)) == 0
    assert bi_distance(Permutation.parse("4213")) == 2
    assert bi_distance(Permutation.parse("132")) == 1
    assert alternating_cycle_count(G("132")) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_parity_and_unique_maximum(n):
    maxima = []
    for p in all_permutations(n):
        g = build_cycle_graph(p)
        assert sorted(g.successor) == list(range(n + 1))
        c = alternating_cycle_count(g)
        assert (n + 1 - c) % 2 == 0
        if c == n + 1:
            maxima.append(p)
    assert maxima == [identity(n)]


@given(permutations(max_n=12))
def test_successor_matches_explicit_edges(p):
    assert alternating_cycle_count(build_cycle_graph(p)) == explicit_alternating_cycles(p)


@pytest.mark.parametrize("n", range(2, 6))
def test_single_move_changes_c_by_even_step(n):
    moves = list(all_block_interchanges(n))
    for p in all_permutations(n):
        c = alternating_cycle_count(build_cycle_graph(p))
        for m in moves:
            c2 = alternating_cycle_count(build_cycle_graph(apply_block_interchange(p, m)))
            assert c2 - c in (-2, 0, 2)


def test_graph_export():
    out = graph_export(Permutation.parse("4213"))
    assert out["n"] == 4
    assert out["c"] == 1
    assert sorted(out["black_edges"]) == [[0, 3], [1, 2], [2, 4], [3, 1], [4, 0]]
    assert out["gray_edges"] == [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]
    (cycle,) = out["alternating_cycles"]
    assert len(cycle) == 10
    black = {tuple(e) for e in out["black_edges"]}
    gray = {tuple(e) for e in out["gray_edges"]}
    steps = list(zip(cycle, cycle[1:] + cycle[:1]))
    assert all(s in black for s in steps[0::2])
    assert all(s in gray for s in steps[1::2])
