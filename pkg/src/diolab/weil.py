"""Oblique quartics ``A u^2 + alpha = B v^2 + beta = C w^2 + gamma`` and their map to a cubic.

A point of the quartic goes to ``x = A u^2 + alpha``, ``y = sqrt(ABC) u v w``
on ``y^2 = (x - alpha)(x - beta)(x - gamma)``.  Only the instance-level maps
are implemented; no descent theory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from diolab.curves import CoefficientTriple, CubicCurve, cubic_from_roots, curve_eight
from diolab.errors import BadScale, NotAffine, NotOnQuartic, PreconditionNotSquare
from diolab.numeric import is_perfect_square


@dataclass(frozen=True)
class QuarticOmega:
    A: int
    B: int
    C: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if 0 in (self.A, self.B, self.C):
            raise ValueError("A, B, C must be nonzero")

    @property
    def delta(self) -> int:
        al, be, ga = self.alpha, self.beta, self.gamma
        return (be - ga) * (ga - al) * (al - be)

    @property
    def abc_root(self) -> Optional[int]:
        """sqrt(A*B*C) when it is an integer."""
        return is_perfect_square(self.A * self.B * self.C)

    def cubic(self) -> CubicCurve:
        return cubic_from_roots(1, self.alpha, self.beta, self.gamma)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.A, self.B, self.C, self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class QuarticPoint:
    """Homogeneous point (U : V : W : T)."""

    U: int
    V: int
    W: int
    T: int
    scaled: bool = False

    def __post_init__(self):
        g = math.gcd(math.gcd(self.U, self.V), math.gcd(self.W, self.T))
        if g == 0:
            raise ValueError("all coordinates are zero")
        if g != 1 and not self.scaled:
            raise ValueError(f"coordinates share the divisor {g}; pass scaled=True")

    def affine(self) -> tuple[Fraction, Fraction, Fraction]:
        if self.T == 0:
            raise NotAffine("T = 0 has no affine chart u = U/T")
        return Fraction(self.U, self.T), Fraction(self.V, self.T), Fraction(self.W, self.T)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.U, self.V, self.W, self.T)


def _members(q: QuarticOmega, pt: QuarticPoint) -> tuple[int, int, int]:
    t2 = pt.T * pt.T
    return (q.A * pt.U**2 + q.alpha * t2,
            q.B * pt.V**2 + q.beta * t2,
            q.C * pt.W**2 + q.gamma * t2)


def omega_membership(q: QuarticOmega, pt: QuarticPoint) -> bool:
    first, second, third = _members(q, pt)
    return first == second == third


def map_to_cubic(q: QuarticOmega, pt: QuarticPoint) -> tuple[Fraction, Fraction]:
    if not omega_membership(q, pt):
        raise NotOnQuartic(f"{pt.as_tuple()} is not on {q.as_tuple()}")
    root = q.abc_root
    if root is None:
        raise BadScale(f"A*B*C = {q.A * q.B * q.C} is not a perfect square")
    u, v, w = pt.affine()
    x = q.A * u * u + q.alpha
    y = root * u * v * w
    if not q.cubic().contains(x, y):  # pragma: no cover - algebraic identity
        raise ArithmeticError("mapped point is off the cubic")
    return x, y


def phi_psi(q: QuarticOmega, pt: QuarticPoint) -> tuple[int, int]:
    """The two quadrics whose common zeros describe the quartic."""
    A, B, C, al, be, ga = q.as_tuple()
    U2, V2, W2, T2 = pt.U**2, pt.V**2, pt.W**2, pt.T**2
    phi = al * (be - ga) * A * U2 + be * (ga - al) * B * V2 + ga * (al - be) * C * W2 - q.delta * T2
    psi = (be - ga) * A * U2 + (ga - al) * B * V2 + (al - be) * C * W2
    return phi, psi


def instantiate_34(t: CoefficientTriple) -> QuarticOmega:
    """``Omega(c^2, a, a; 0, b, c)``: its equation is ``c^2 U^2 = aV^2 + bT^2 = aW^2 + cT^2``."""
    return QuarticOmega(t.c * t.c, t.a, t.a, 0, t.b, t.c)


def instantiate_34_system10(t: CoefficientTriple) -> QuarticOmega:
    return QuarticOmega(t.a * t.a, t.c, t.c, 0, -t.b, t.a)


def rational_point_M(t: CoefficientTriple) -> tuple[Fraction, Fraction]:
    """The point ``(c^2/b, (ac/b^2) sqrt(c+b) sqrt(c) sqrt(b))`` on ``curve_eight(t)``.

    It is the image of the quartic point ``(1, sqrt(c+b), sqrt(c), sqrt(b))``
    and exists only when those three roots are integers.
    """
    roots = {}
    failing = []
    for name, value in (("c+b", t.c + t.b), ("c", t.c), ("b", t.b)):
        r = is_perfect_square(value)
        if r is None:
            failing.append(f"{name}={value}")
        roots[name] = r
    if failing:
        raise PreconditionNotSquare(failing)
    x = Fraction(t.c * t.c, t.b)
    y = Fraction(t.a * t.c, t.b * t.b) * roots["c+b"] * roots["c"] * roots["b"]
    if not curve_eight(t).contains(x, y):  # pragma: no cover - algebraic identity
        raise ArithmeticError("M is off curve_eight")
    return x, y
