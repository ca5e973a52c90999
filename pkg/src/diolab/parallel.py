"""Deterministic data-parallel map over partitions.

Partitions are evaluated in worker processes and concatenated in partition
order, so the output never depends on ``jobs``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split the inclusive range [lo, hi] into at most ``parts`` contiguous pieces."""
    if hi < lo:
        return []
    parts = max(1, min(parts, hi - lo + 1))
    size, extra = divmod(hi - lo + 1, parts)
    out = []
    start = lo
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0) - 1
        out.append((start, stop))
        start = stop + 1
    return out


def chunked(items: Sequence[T], parts: int) -> list[Sequence[T]]:
    return [items[i:j + 1] for i, j in split_range(0, len(items) - 1, parts)]


def map_partitions(func: Callable[[T], list[R]], partitions: Sequence[T],
                   jobs: int = 1) -> list[R]:
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or len(partitions) <= 1:
        results = [func(p) for p in partitions]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(func, partitions))
    merged: list[R] = []
    for chunk in results:
        merged.extend(chunk)
    return merged
