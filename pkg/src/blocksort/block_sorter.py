"""Block interchanges, a greedy optimal sorter and a BFS distance oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .cycle_graph import bi_distance, graph_cycle_count, successor_map
from .perm import InvariantError, Permutation, identity, rank, unrank

BFS_MAX_N = 7


@dataclass(frozen=True)
class BlockInterchange:
    """Swap positions i..k with positions j..l (1-based, i <= k < j <= l)."""

    i: int
    k: int
    j: int
    l: int

    def __post_init__(self):
        if not 1 <= self.i <= self.k < self.j <= self.l:
            raise ValueError(f"invalid block interchange {self.as_list()}: need 1 <= i <= k < j <= l")

    def as_list(self) -> list[int]:
        return [self.i, self.k, self.j, self.l]

    def inverse(self) -> "BlockInterchange":
        """The interchange that undoes this one."""
        left = self.k - self.i + 1
        right = self.l - self.j + 1
        return BlockInterchange(self.i, self.i + right - 1, self.l - left + 1, self.l)


@dataclass
class SortCertificate:
    source: Permutation
    moves: list[BlockInterchange]
    claimed_distance: int
    states: list[Permutation] = field(default_factory=list)

    def replay(self) -> Permutation:
        p = self.source
        for m in self.moves:
            p = apply_block_interchange(p, m)
        return p


def _interchange(seq: tuple, i: int, k: int, j: int, l: int) -> tuple:
    return seq[: i - 1] + seq[j - 1 : l] + seq[k : j - 1] + seq[i - 1 : k] + seq[l:]


def apply_block_interchange(p: Permutation, m: BlockInterchange) -> Permutation:
    if m.l > p.n:
        raise ValueError(f"block interchange {m.as_list()} out of range for degree {p.n}")
    return Permutation._trusted(_interchange(p.image, m.i, m.k, m.j, m.l))


def all_block_interchanges(n: int) -> Iterator[BlockInterchange]:
    """Every valid (i, k, j, l) in lexicographic order; there are C(n+2, 4)."""
    for i in range(1, n + 1):
        for k in range(i, n + 1):
            for j in range(k + 1, n + 1):
                for l in range(j, n + 1):
                    yield BlockInterchange(i, k, j, l)


def _first_improving_move(seq: list[int]) -> tuple[int, int, int, int] | None:
    """Lexicographically first move raising c(G) by two, or None.

    ``seq`` is 0, p_1, ..., p_n.  With A = p_i, B = p_{k+1}, C = p_j,
    D = p_{l+1} (p_{n+1} = p_0) the move turns the alternating-step map s
    into s . (B D) . (A C), so it gains two cycles iff B, D share a cycle of
    s and A, C share a cycle of s . (B D).
    """
    m = len(seq)
    n = m - 1
    succ = successor_map(seq[1:])
    cid = [-1] * m
    pos = [0] * m
    length = []
    for start in range(m):
        if cid[start] >= 0:
            continue
        c = len(length)
        v, t = start, 0
        while cid[v] < 0:
            cid[v] = c
            pos[v] = t
            t += 1
            v = succ[v]
        length.append(t)

    def moving(idx: int) -> bool:
        v = seq[idx % m]
        return succ[v] != v

    live = [x for x in range(1, n + 2) if moving(x)]
    for i in live:
        if i > n:
            break
        A = seq[i]
        for k1 in live:
            if k1 <= i or k1 > n:
                continue
            k = k1 - 1
            B = seq[k1]
            zb = cid[B]
            pb = pos[B]
            L = length[zb]
            for j in live:
                if j <= k or j > n:
                    continue
                C = seq[j]
                for l1 in live:
                    if l1 <= j:
                        continue
                    D = seq[l1 % m]
                    if cid[D] != zb:
                        continue
                    d = (pos[D] - pb) % L
                    a_in = cid[A] == zb
                    c_in = cid[C] == zb
                    if a_in and c_in:
                        ra = (pos[A] - pb) % L
                        rc = (pos[C] - pb) % L
                        if (ra == 0 or ra > d) == (rc == 0 or rc > d):
                            return i, k, j, l1 - 1
                    elif not a_in and not c_in and cid[A] == cid[C]:
                        return i, k, j, l1 - 1
    return None


def greedy_sort(p: Permutation) -> SortCertificate:
    """Sort ``p`` taking, at each step, the first move that gains two alternating cycles."""
    target = bi_distance(p)
    seq = [0, *p.image]
    c = graph_cycle_count(p.image)
    moves = []
    states = [p]
    while c < p.n + 1:
        found = _first_improving_move(seq)
        if found is None:
            raise InvariantError(f"no cycle-increasing block interchange from {Permutation._trusted(tuple(seq[1:]))}")
        move = BlockInterchange(*found)
        image = _interchange(tuple(seq[1:]), *found)
        c_next = graph_cycle_count(image)
        if c_next != c + 2:
            raise InvariantError(f"move {move.as_list()} changed c(G) by {c_next - c}, expected +2")
        seq = [0, *image]
        c = c_next
        moves.append(move)
        states.append(Permutation._trusted(image))
    if len(moves) != target:
        raise InvariantError(f"greedy used {len(moves)} moves, distance is {target}")
    return SortCertificate(p, moves, target, states)


def bfs_distances(n: int) -> list[int]:
    """Distance from the identity for every degree-n permutation, indexed by rank."""
    if not 2 <= n <= BFS_MAX_N:
        raise ValueError(f"BFS oracle supports 2 <= n <= {BFS_MAX_N}, got {n}")
    moves = [(m.i, m.k, m.j, m.l) for m in all_block_interchanges(n)]
    dist = [-1] * math.factorial(n)
    start = identity(n).image
    dist[rank(start)] = 0
    frontier = [start]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for state in frontier:
            for mv in moves:
                t = _interchange(state, *mv)
                r = rank(t)
                if dist[r] < 0:
                    dist[r] = level
                    nxt.append(t)
        frontier = nxt
    return dist


def bfs_distance_table(n: int) -> dict[Permutation, int]:
    return {Permutation._trusted(unrank(r, n)): d for r, d in enumerate(bfs_distances(n))}
