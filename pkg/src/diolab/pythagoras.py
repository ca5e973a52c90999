"""Pythagorean triples ``W = k*2pq, T = k*(p^2 - q^2), V = k*(p^2 + q^2)``.

Canonical orientation keeps W even and T odd for primitive triples; callers
that need the legs swapped do so explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Optional

from diolab.errors import InvalidParameters
from diolab.numeric import is_perfect_square
from diolab.parallel import map_partitions, split_range


@dataclass(frozen=True)
class PythagoreanTriple:
    p: int
    q: int
    k: int
    w: int
    t: int
    v: int

    def __post_init__(self):
        p, q, k = self.p, self.q, self.k
        expected = (k * 2 * p * q, k * (p * p - q * q), k * (p * p + q * q))
        if (self.w, self.t, self.v) != expected:
            raise InvalidParameters(
                f"legs {(self.w, self.t, self.v)} do not match (p, q, k) = {(p, q, k)}"
            )
        if self.w**2 + self.t**2 != self.v**2:  # pragma: no cover - algebraic identity
            raise ArithmeticError("W^2 + T^2 != V^2")

    @property
    def primitive(self) -> bool:
        return self.k == 1 and math.gcd(self.p, self.q) == 1 and (self.p + self.q) % 2 == 1

    @property
    def area(self) -> int:
        return self.w * self.t // 2

    def legs(self) -> tuple[int, int, int]:
        return (self.w, self.t, self.v)


def triple_from(p: int, q: int, k: int = 1) -> PythagoreanTriple:
    if not p > q > 0:
        raise InvalidParameters(f"need p > q > 0, got p={p}, q={q}")
    if k < 1:
        raise InvalidParameters(f"need k >= 1, got {k}")
    if k == 1 and (math.gcd(p, q) != 1 or (p + q) % 2 == 0):
        raise InvalidParameters(
            f"primitive triple needs coprime p, q of opposite parity, got {p}, {q}"
        )
    return PythagoreanTriple(p, q, k, k * 2 * p * q, k * (p * p - q * q), k * (p * p + q * q))


def _primitive_pairs(p_lo: int, p_hi: int, bound_v: Optional[int]):
    for p in range(max(p_lo, 2), p_hi + 1):
        for q in range(1 + p % 2, p, 2):  # opposite parity
            if bound_v is not None and p * p + q * q > bound_v:
                break
            if math.gcd(p, q) == 1:
                yield p, q


def _sort_key(tr: PythagoreanTriple):
    return (tr.v, tr.w, tr.t)


def enumerate_primitive(bound_v: int) -> list[PythagoreanTriple]:
    """All primitive triples with ``V <= bound_v``, sorted by (V, W)."""
    p_max = math.isqrt(max(bound_v - 1, 0))
    found = [triple_from(p, q) for p, q in _primitive_pairs(2, p_max, bound_v)]
    return sorted(found, key=_sort_key)


def primitive_by_p(p_max: int) -> list[PythagoreanTriple]:
    """All primitive triples generated by ``p <= p_max``, sorted by (V, W)."""
    found = [triple_from(p, q) for p, q in _primitive_pairs(2, p_max, None)]
    return sorted(found, key=_sort_key)


def _square_area_chunk(bound_v: int, p_range: tuple[int, int]) -> list[PythagoreanTriple]:
    hits = []
    for p, q in _primitive_pairs(p_range[0], p_range[1], bound_v):
        base = triple_from(p, q)
        for k in range(1, bound_v // base.v + 1):
            w, t = k * base.w, k * base.t
            if is_perfect_square(w * t // 2) is not None:
                hits.append(triple_from(p, q, k) if k > 1 else base)
    return hits


def square_area_search(bound_v: int, jobs: int = 1) -> list[PythagoreanTriple]:
    """Every triangle (primitive or scaled) with V <= bound_v and square area.

    Expected to come back empty: no right triangle with integer sides has
    square area.
    """
    if bound_v < 5:
        raise InvalidParameters("bound_v must be >= 5")
    p_max = math.isqrt(bound_v - 1)
    hits = map_partitions(partial(_square_area_chunk, bound_v),
                          split_range(2, p_max, jobs), jobs)
    return sorted(hits, key=lambda tr: (tr.v, tr.w, tr.t, tr.k))


@dataclass(frozen=True)
class SquaresInAP:
    """Three squares r^2 < s^2 < t^2 with common difference d."""

    r2: int
    s2: int
    t2: int
    d: int
    d_root: Optional[int]

    @property
    def difference_is_square(self) -> bool:
        return self.d_root is not None


def _ap_chunk(bound: int, s_range: tuple[int, int]) -> list[SquaresInAP]:
    out = []
    top = bound * bound
    for s in range(s_range[0], s_range[1] + 1):
        s2 = s * s
        for r in range(1, s):
            t2 = 2 * s2 - r * r
            if t2 > top:
                continue
            if is_perfect_square(t2) is None:
                continue
            d = s2 - r * r
            out.append(SquaresInAP(r * r, s2, t2, d, is_perfect_square(d)))
    return out


def squares_in_ap_search(bound: int, jobs: int = 1) -> list[SquaresInAP]:
    """All ``0 < r < s < t <= bound`` with ``s^2 - r^2 = t^2 - s^2``."""
    if bound < 1:
        raise InvalidParameters("bound must be >= 1")
    found = map_partitions(partial(_ap_chunk, bound), split_range(2, bound, jobs), jobs)
    return sorted(found, key=lambda e: (e.r2, e.s2, e.t2))
