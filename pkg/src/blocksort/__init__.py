"""Sorting permutations by block interchanges, Hultman numbers and
same-cycle probabilities for products of two full cycles."""

from .averages import a_brute, a_closed, a_via_stirling_poly, b_brute, b_closed, harmonic, recurrence_check
from .block_sorter import (
    BlockInterchange,
    SortCertificate,
    all_block_interchanges,
    apply_block_interchange,
    bfs_distance_table,
    greedy_sort,
)
from .cycle_graph import CycleGraph, alternating_cycle_count, bi_distance, build_cycle_graph
from .cycle_products import (
    SameCycleEstimate,
    extend_cycle,
    proposition_delta,
    same_cycle_exhaustive,
    same_cycle_exhaustive_reduced,
    same_cycle_montecarlo,
    stanley_probability,
)
from .hultman import (
    HultmanTable,
    IntPolynomial,
    hultman_direct,
    hultman_formula,
    hultman_product,
    log_concave_check,
    pn_brute,
    pn_poly,
    qn_poly,
    stirling_first_unsigned,
)
from .perm import (
    CycleDecomposition,
    InvariantError,
    Permutation,
    canonical_cycle,
    compose,
    cycle_count,
    cycle_decomposition,
    enumerate_full_cycles,
    identity,
    inverse,
    random_full_cycle,
    same_cycle,
)

__version__ = "0.1.0"
