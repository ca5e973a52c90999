"""Descent for x^4 + y^4 = z^2, Euler's parametric families, and brute-force oracles.

``descent_step`` follows the classical chain faithfully even though no valid
input exists; each sub-step is a standalone function with its own
certificate so that the chain can be tested piece by piece, and a failing
candidate reports exactly which certificate broke.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Optional

from diolab.errors import DecompositionFailed, InvalidParameters, NotASolution
from diolab.numeric import is_perfect_square
from diolab.parallel import map_partitions, split_range


@dataclass(frozen=True)
class EquationFamily:
    kind: str
    n: Optional[int] = None

    KINDS = ("quartic-sum", "quartic-diff", "sum-to-fourth", "diff-to-fourth", "lebesgue")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InvalidParameters(f"unknown family {self.kind!r}")
        if self.kind == "lebesgue":
            if self.n is None or self.n < 3:
                raise InvalidParameters("the Lebesgue family needs n >= 3")
        elif self.n is not None:
            raise InvalidParameters(f"{self.kind} takes no exponent")

    @classmethod
    def lebesgue(cls, n: int) -> "EquationFamily":
        return cls("lebesgue", n)

    def describe(self) -> str:
        return {
            "quartic-sum": "x^4 + y^4 = z^2",
            "quartic-diff": "t^4 - w^4 = r^2",
            "sum-to-fourth": "x^2 + y^2 = z^4",
            "diff-to-fourth": "x^2 - y^2 = z^4",
            "lebesgue": f"x^{2 * (self.n or 0)} + y^{2 * (self.n or 0)} = z^2",
        }[self.kind]


QUARTIC_SUM = EquationFamily("quartic-sum")
QUARTIC_DIFF = EquationFamily("quartic-diff")
SUM_TO_FOURTH = EquationFamily("sum-to-fourth")
DIFF_TO_FOURTH = EquationFamily("diff-to-fourth")


def _scan(family: EquationFamily, bound: int, outer: tuple[int, int]) -> list[tuple[int, int, int]]:
    hits = []
    kind = family.kind
    for x in range(outer[0], outer[1] + 1):
        if kind == "quartic-sum":
            # x <= y; the family is symmetric
            x4 = x**4
            for y in range(x, bound + 1):
                z = is_perfect_square(x4 + y**4)
                if z is not None:
                    hits.append((x, y, z))
        elif kind == "lebesgue":
            e = 2 * family.n
            xe = x**e
            for y in range(x, bound + 1):
                z = is_perfect_square(xe + y**e)
                if z is not None:
                    hits.append((x, y, z))
        elif kind == "quartic-diff":
            # x plays t, y plays w < t
            x4 = x**4
            for y in range(1, x):
                r = is_perfect_square(x4 - y**4)
                if r is not None and r > 0:
                    hits.append((x, y, r))
        elif kind == "sum-to-fourth":
            for y in range(x, bound + 1):
                s = is_perfect_square(x * x + y * y)
                if s is None:
                    continue
                z = is_perfect_square(s)
                if z is not None:
                    hits.append((x, y, z))
        else:  # diff-to-fourth: x > y > 0
            for y in range(1, x):
                z = power_root4(x * x - y * y)
                if z is not None:
                    hits.append((x, y, z))
    return hits


def power_root4(value: int) -> Optional[int]:
    s = is_perfect_square(value)
    if s is None:
        return None
    r = is_perfect_square(s)
    return r if r else None


def exhaustive_search(family: EquationFamily, bound: int, jobs: int = 1) -> list[tuple[int, int, int]]:
    """All positive solutions with both free variables ``<= bound``.

    Symmetric families report ``x <= y``; the difference families report
    the larger variable first.  No coprimality filter is applied, which only
    makes the emptiness checks stronger.
    """
    if bound < 1:
        raise InvalidParameters("bound must be >= 1")
    hits = map_partitions(partial(_scan, family, bound), split_range(1, bound, jobs), jobs)
    return sorted(hits)


def lebesgue_check(n: int, bound: int, jobs: int = 1) -> list[tuple[int, int, int]]:
    if n < 3:
        raise InvalidParameters("n must be >= 3")
    return exhaustive_search(EquationFamily.lebesgue(n), bound, jobs)


def euler_family_28(p: int, q: int) -> tuple[int, int, int]:
    """``x^2 + y^2 = z^4`` with ``x = p^4 - 6p^2q^2 + q^4`` (may be negative)."""
    if not p > q > 0:
        raise InvalidParameters(f"need p > q > 0, got {p}, {q}")
    x = p**4 - 6 * p * p * q * q + q**4
    y = 4 * p**3 * q - 4 * p * q**3
    z = p * p + q * q
    if x * x + y * y != z**4:  # pragma: no cover
        raise ArithmeticError("x^2 + y^2 != z^4")
    return x, y, z


def euler_family_28p(p: int, q: int) -> tuple[int, int, int]:
    """``x^2 - y^2 = z^4`` with ``x = p^4 + 6p^2q^2 + q^4``."""
    if not p > q > 0:
        raise InvalidParameters(f"need p > q > 0, got {p}, {q}")
    x = p**4 + 6 * p * p * q * q + q**4
    y = 4 * p**3 * q + 4 * p * q**3
    z = p * p - q * q
    if x * x - y * y != z**4:  # pragma: no cover
        raise ArithmeticError("x^2 - y^2 != z^4")
    return x, y, z


def match_sum_to_fourth(x: int, y: int, z: int, max_p: Optional[int] = None):
    """Find (p, q, k) with ``euler_family_28(p, q)`` scaled to (x, y, z).

    Scaling sends (x, y, z) to (k^2 x, k^2 y, k z); the sign of x and the
    order of the legs are ignored.  Returns None when nothing matches.
    """
    target = sorted((abs(x), abs(y)))
    for k in range(1, z + 1):
        if z % k:
            continue
        zp = z // k
        top = math.isqrt(zp) if max_p is None else min(max_p, math.isqrt(zp))
        for p in range(2, top + 1):
            q2 = zp - p * p
            q = is_perfect_square(q2)
            if q is None or not 0 < q < p:
                continue
            ex, ey, _ = euler_family_28(p, q)
            if sorted((k * k * abs(ex), k * k * ey)) == target:
                return p, q, k
    return None


# --- the descent chain ---------------------------------------------------------

@dataclass(frozen=True)
class DescentState:
    """A candidate with x^4 + y^4 = z^2 plus the parameters that produced it."""

    x: int
    y: int
    z: int
    p: Optional[int] = None
    q: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None

    @property
    def valid(self) -> bool:
        return (min(self.x, self.y, self.z) > 0
                and self.x**4 + self.y**4 == self.z**2
                and math.gcd(self.x, self.y) == 1)


def pythagorean_parameters(even_leg: int, odd_leg: int, hyp: int) -> tuple[int, int]:
    """Recover (p, q) with ``even = 2pq, odd = p^2 - q^2, hyp = p^2 + q^2``.

    Raises DecompositionFailed unless the input is a primitive triple with
    the even leg where it is claimed to be.
    """
    if min(even_leg, odd_leg, hyp) <= 0:
        raise DecompositionFailed("pythagorean", "legs must be positive")
    if even_leg**2 + odd_leg**2 != hyp**2:
        raise DecompositionFailed("pythagorean", f"{even_leg}^2 + {odd_leg}^2 != {hyp}^2")
    if even_leg % 2 or odd_leg % 2 == 0:
        raise DecompositionFailed("parity", f"expected even {even_leg} and odd {odd_leg}")
    if math.gcd(even_leg, odd_leg) != 1:
        raise DecompositionFailed("coprimality", f"gcd({even_leg}, {odd_leg}) != 1")
    p = is_perfect_square((hyp + odd_leg) // 2)
    q = is_perfect_square((hyp - odd_leg) // 2)
    if p is None or q is None or 2 * p * q != even_leg:  # pragma: no cover
        raise DecompositionFailed("pythagorean", "no (p, q) parametrization")
    return p, q


def coprime_square_product(u: int, v: int) -> tuple[int, int]:
    """If ``u*v`` is a square with gcd(u, v) = 1, both factors are squares; return their roots."""
    if math.gcd(u, v) != 1:
        raise DecompositionFailed("coprimality", f"gcd({u}, {v}) != 1")
    if is_perfect_square(u * v) is None:
        raise DecompositionFailed("square", f"{u}*{v} is not a square")
    ru, rv = is_perfect_square(u), is_perfect_square(v)
    if ru is None or rv is None:  # pragma: no cover - unique factorization
        raise DecompositionFailed("square", f"{u} or {v} is not a square")
    return ru, rv


def descent_step(s: DescentState) -> DescentState:
    """Produce a strictly smaller solution from ``s``.

    Chain: (x^2, y^2, z) is a primitive triple giving (p, q); (q, y, p) is a
    primitive triple giving (a, b); x^2 = 4ab(a^2 + b^2) forces a, b and
    a^2 + b^2 to be squares, whose roots form the next solution.
    """
    if not s.valid:
        raise NotASolution(f"({s.x}, {s.y}, {s.z}) is not a primitive solution of x^4 + y^4 = z^2")
    x, y = s.x, s.y
    if x % 2 and y % 2 == 0:
        x, y = y, x
    if x % 2:
        raise DecompositionFailed("parity", "both x and y are odd")
    p, q = pythagorean_parameters(x * x, y * y, s.z)
    # q is even and p odd, so (q, y, p) is primitive with q the even leg
    a, b = pythagorean_parameters(q, y, p)
    if x * x != 4 * a * b * (a * a + b * b):  # pragma: no cover
        raise DecompositionFailed("square", "x^2 != 4ab(a^2 + b^2)")
    coprime_square_product(a * b, a * a + b * b)
    xa, yb = coprime_square_product(a, b)
    zc = is_perfect_square(a * a + b * b)
    if zc is None:  # pragma: no cover - certified by coprime_square_product
        raise DecompositionFailed("square", f"{a}^2 + {b}^2 is not a square")
    nxt = DescentState(xa, yb, zc, p, q, a, b)
    if not nxt.valid or not nxt.z < s.z:  # pragma: no cover
        raise DecompositionFailed("descent", "new solution is not smaller")
    return nxt
