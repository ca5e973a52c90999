"""Concordant and discordant forms X^2 + mY^2, X^2 + nY^2, and Euler's double equation.

``search_concordant`` is an exhaustive scan of ``0 < X, Y <= bound``.  For
each Y the X values making ``X^2 + mY^2`` a square are found from the
factor pairs of ``|m| Y^2`` instead of by looping over X; that is the same
set, found without testing 10^8 pairs at bound 10^4.  ``search_concordant_naive``
is the plain double loop, kept as the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Optional

from diolab.curves import CoefficientTriple, frey_curve
from diolab.errors import InvalidParameters, NotOnDoubleEquation
from diolab.numeric import divisors_from_factors, factorize, is_perfect_square
from diolab.parallel import map_partitions, split_range
from diolab.records import ClaimResult


@dataclass(frozen=True)
class ConcordantPair:
    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise InvalidParameters("m and n must be nonzero")
        if self.m == self.n:
            raise InvalidParameters("m and n must differ")


@dataclass(frozen=True)
class EulerDoubleSolution:
    """``P^2 + bQ^2 = V^2`` and ``P^2 - aQ^2 = T^2``."""

    P: int
    Q: int
    V: int
    T: int

    def __post_init__(self):
        if min(self.P, self.Q, self.V, self.T) <= 0:
            raise InvalidParameters("P, Q, V, T must be positive")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.P, self.Q) == 1

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.P, self.Q, self.V, self.T)


def _x_values(m: int, y: int, bound: int, m_factors: dict[int, int]) -> list[int]:
    """All 0 < X <= bound with X^2 + m*Y^2 a square."""
    factors = dict(m_factors)
    for prime, exp in factorize(y).items():
        factors[prime] = factors.get(prime, 0) + 2 * exp
    target = abs(m) * y * y
    xs = set()
    for d in divisors_from_factors(factors):
        e = target // d
        if e < d:
            break
        if (e - d) % 2:
            continue
        # m > 0: (Z - X)(Z + X) = target, X = (e - d)/2
        # m < 0: (X - Z)(X + Z) = target, X = (e + d)/2
        x = (e - d) // 2 if m > 0 else (e + d) // 2
        if 0 < x <= bound:
            xs.add(x)
    return sorted(xs)


def _concordant_chunk(pair: ConcordantPair, bound: int,
                      y_range: tuple[int, int]) -> list[tuple[int, int, int, int]]:
    m_factors = factorize(pair.m) if abs(pair.m) > 1 else {}
    hits = []
    for y in range(y_range[0], y_range[1] + 1):
        for x in _x_values(pair.m, y, bound, m_factors):
            z = is_perfect_square(x * x + pair.m * y * y)
            t = is_perfect_square(x * x + pair.n * y * y)
            if z is not None and t is not None:
                hits.append((x, y, z, t))
    return hits


def search_concordant(pair: ConcordantPair, bound: int, jobs: int = 1) -> list[tuple[int, int, int, int]]:
    """All (X, Y, Z, T) with ``0 < X, Y <= bound``, ``X^2 + mY^2 = Z^2``, ``X^2 + nY^2 = T^2``."""
    if bound < 1:
        raise InvalidParameters("bound must be >= 1")
    hits = map_partitions(partial(_concordant_chunk, pair, bound),
                          split_range(1, bound, jobs), jobs)
    return sorted(hits)


def search_concordant_naive(pair: ConcordantPair, bound: int) -> list[tuple[int, int, int, int]]:
    hits = []
    for x in range(1, bound + 1):
        for y in range(1, bound + 1):
            z = is_perfect_square(x * x + pair.m * y * y)
            if z is None:
                continue
            t = is_perfect_square(x * x + pair.n * y * y)
            if t is not None:
                hits.append((x, y, z, t))
    return hits


def euler_40_check(t: CoefficientTriple, sol: EulerDoubleSolution) -> tuple[ClaimResult, ClaimResult]:
    P, Q, V, T = sol.as_tuple()
    base = dict(triple=t.as_tuple(), solution=sol.as_tuple(), system="euler40")
    first = P * P + t.b * Q * Q
    second = P * P - t.a * Q * Q
    return (
        ClaimResult("C40a", first == V * V, first, V * V, note="P^2 + b*Q^2 = V^2", **base),
        ClaimResult("C40b", second == T * T, second, T * T, note="P^2 - a*Q^2 = T^2", **base),
    )


def euler_40_solutions(t: CoefficientTriple, bound: int, jobs: int = 1) -> list[EulerDoubleSolution]:
    """Solutions of the Euler double equation with ``0 < P, Q <= bound``."""
    hits = search_concordant(ConcordantPair(t.b, -t.a), bound, jobs)
    return [EulerDoubleSolution(*h) for h in hits if h[2] > 0 and h[3] > 0]


def map_40_to_frey(t: CoefficientTriple, sol: EulerDoubleSolution) -> tuple[Fraction, Fraction]:
    """``(P^2/Q^2, PVT/Q^3)``, a point of the Frey curve of ``t``."""
    if sol.Q == 0:
        raise NotOnDoubleEquation("Q must be nonzero")
    if not all(r.holds for r in euler_40_check(t, sol)):
        raise NotOnDoubleEquation(f"{sol.as_tuple()} does not solve the double equation for {t.as_tuple()}")
    x = Fraction(sol.P * sol.P, sol.Q * sol.Q)
    y = Fraction(sol.P * sol.V * sol.T, sol.Q**3)
    if not frey_curve(t).contains(x, y):  # pragma: no cover - polynomial identity
        raise ArithmeticError("image is off the Frey curve")
    return x, y


@dataclass(frozen=True)
class PrimitiveAnalysis:
    triple: tuple[int, int, int]
    search_bound: int
    c_root: Optional[int]
    candidate: Optional[EulerDoubleSolution]
    candidate_claims: tuple[ClaimResult, ...]
    solutions: tuple[EulerDoubleSolution, ...]
    solution_claims: tuple[ClaimResult, ...] = field(default=())

    @property
    def findings(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.candidate_claims + self.solution_claims if not r.holds)


def _claims_43(t: CoefficientTriple, sol: EulerDoubleSolution) -> list[ClaimResult]:
    a, b, c = t.as_tuple()
    P, Q, V, T = sol.as_tuple()
    base = dict(triple=t.as_tuple(), solution=sol.as_tuple(), system="euler40")
    u_sq = a * V * V + b * T * T
    w_sq = V * V - T * T
    return [
        ClaimResult("C40U", u_sq == P * P * c, u_sq, P * P * c,
                    note="a*V^2 + b*T^2 = P^2*c", **base),
        ClaimResult("C40W", w_sq == Q * Q * c, w_sq, Q * Q * c,
                    note="V^2 - T^2 = Q^2*c", **base),
        ClaimResult("C43a", V * V == 2 * c * b, V * V, 2 * c * b, note="V^2 = 2*c*b", **base),
        ClaimResult("C43b", T * T == c * (b - a), T * T, c * (b - a), note="T^2 = c*(b - a)", **base),
    ]


def primitive_analysis_43(t: CoefficientTriple, bound: int = 50, jobs: int = 1) -> PrimitiveAnalysis:
    """Test the deduction ``P0^2 = c, Q0 = 1`` and the relations on found solutions.

    When c is a square the candidate ``(sqrt(c), 1)`` is checked against both
    equations; a failing equation is reported, not assumed away.
    """
    c_root = is_perfect_square(t.c)
    candidate = None
    cand_claims: tuple[ClaimResult, ...] = ()
    if c_root is not None:
        P, Q = c_root, 1
        first = P * P + t.b * Q * Q
        second = P * P - t.a * Q * Q
        V = is_perfect_square(first)
        T = is_perfect_square(second)
        # floor roots (at least 1) when not square, so the failing equation is visible
        candidate = EulerDoubleSolution(
            P, Q,
            V if V else max(1, math.isqrt(max(first, 0))),
            T if T else max(1, math.isqrt(max(second, 0))),
        )
        cand_claims = euler_40_check(t, candidate)
    sols = tuple(euler_40_solutions(t, bound, jobs))
    claims = tuple(r for s in sols for r in _claims_43(t, s))
    return PrimitiveAnalysis(t.as_tuple(), bound, c_root, candidate, cand_claims, sols, claims)
