"""The bicolored cycle graph of a permutation and the block-interchange distance.

Vertices are 0..n with p_0 = 0 and indices read modulo n+1.  The black edge
out of p_i goes to p_{i-1}; the gray edge out of v goes to v+1.  Following a
black edge and then a gray edge is a permutation of the vertex set, and its
cycles are exactly the alternating cycles of the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .perm import InvariantError, Permutation


@dataclass(frozen=True)
class CycleGraph:
    n: int
    successor: tuple[int, ...]

    def black_target(self, v: int) -> int:
        return (self.successor[v] - 1) % (self.n + 1)


def successor_map(image: Sequence[int]) -> list[int]:
    n = len(image)
    m = n + 1
    succ = [0] * m
    prev = image[n - 1]  # p_{-1} = p_n
    for v in (0, *image):
        succ[v] = (prev + 1) % m
        prev = v
    return succ


def count_succ_cycles(succ: Sequence[int]) -> int:
    seen = bytearray(len(succ))
    count = 0
    for start in range(len(succ)):
        if seen[start]:
            continue
        count += 1
        v = start
        while not seen[v]:
            seen[v] = 1
            v = succ[v]
    return count


def graph_cycle_count(image: Sequence[int]) -> int:
    """c(G(p)) straight from a one-line image."""
    return count_succ_cycles(successor_map(image))


def build_cycle_graph(p: Permutation) -> CycleGraph:
    return CycleGraph(p.n, tuple(successor_map(p.image)))


def alternating_cycle_count(g: CycleGraph) -> int:
    return count_succ_cycles(g.successor)


def bi_distance(p: Permutation) -> int:
    c = graph_cycle_count(p.image)
    gap = p.n + 1 - c
    if gap % 2:
        raise InvariantError(f"n+1-c(G) = {gap} is odd for {p}")
    return gap // 2


def alternating_cycles(g: CycleGraph) -> list[list[int]]:
    """Alternating cycles as vertex lists v, black(v), succ(v), black(succ(v)), ..."""
    seen = [False] * (g.n + 1)
    cycles = []
    for start in range(g.n + 1):
        if seen[start]:
            continue
        walk = []
        v = start
        while not seen[v]:
            seen[v] = True
            walk.append(v)
            walk.append(g.black_target(v))
            v = g.successor[v]
        cycles.append(walk)
    return cycles


def graph_export(p: Permutation) -> dict:
    """Full edge lists, for debugging and the ``graph`` subcommand."""
    g = build_cycle_graph(p)
    m = p.n + 1
    seq = (0, *p.image)
    black = [[seq[i], seq[i - 1]] for i in range(m)]
    gray = [[v, (v + 1) % m] for v in range(m)]
    cycles = alternating_cycles(g)
    return {
        "n": p.n,
        "black_edges": black,
        "gray_edges": gray,
        "alternating_cycles": cycles,
        "c": len(cycles),
    }
