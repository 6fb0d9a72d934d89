"""Shard exhaustive scans across worker processes.

Shards are merged in a fixed order, so results do not depend on ``jobs``.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable


def sharded_histogram(fn: Callable[[int, int], Counter], n: int, shards: Iterable[int], jobs: int = 1) -> Counter:
    shards = list(shards)
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if jobs == 1 or len(shards) == 1:
        parts = [fn(n, s) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(shards))) as pool:
            parts = list(pool.map(fn, [n] * len(shards), shards))
    total = Counter()
    for part in parts:
        total.update(part)
    return total
