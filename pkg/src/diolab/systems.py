"""The two Diophantine systems, the eight oblique quartics, and their bounded search.

With ``(a, b, c)`` a coefficient triple:

* system 9:  ``aV^2 + bT^2 = U1^2``,  ``aW^2 + cT^2 = U2^2``,  ``W^2 + T^2 = V^2``
* system 10: ``cV^2 - bT^2 = U1^2``,  ``cW^2 + aT^2 = U2^2``,  ``W^2 + T^2 = V^2``
* quartic k: ``L U^2 = f1(V, T) = f2(W, T)`` for the table in ``QUARTIC_TABLE``.

Solutions are searched over primitive Pythagorean ``(W, T, V)``, optionally
with the legs swapped and optionally scaled.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Optional

from diolab.curves import CoefficientTriple
from diolab.errors import InvalidParameters
from diolab.numeric import is_perfect_square
from diolab.parallel import chunked, map_partitions
from diolab.pythagoras import primitive_by_p
from diolab.records import ClaimResult


class SystemKind(enum.Enum):
    SYSTEM9 = "system9"
    SYSTEM10 = "system10"
    QUARTIC1 = "quartic1"
    QUARTIC2 = "quartic2"
    QUARTIC3 = "quartic3"
    QUARTIC4 = "quartic4"
    QUARTIC5 = "quartic5"
    QUARTIC6 = "quartic6"
    QUARTIC7 = "quartic7"
    QUARTIC8 = "quartic8"

    @property
    def is_quartic(self) -> bool:
        return self.value.startswith("quartic")

    @classmethod
    def parse(cls, text: str) -> "SystemKind":
        key = text.strip().lower()
        aliases = {"9": "system9", "10": "system10"}
        key = aliases.get(key, key)
        if key.startswith("q") and key[1:].isdigit():
            key = "quartic" + key[1:]
        try:
            return cls(key)
        except ValueError:
            raise InvalidParameters(f"unknown system {text!r}") from None


# (leading coefficient L, (V coef, T coef), (W coef, T coef)) as functions of (a, b, c)
QUARTIC_TABLE = {
    SystemKind.QUARTIC1: lambda a, b, c: (c * c, (a, b), (a, c)),
    SystemKind.QUARTIC2: lambda a, b, c: (a * a, (c, -b), (c, a)),
    SystemKind.QUARTIC3: lambda a, b, c: (c * c, (b, a), (b, c)),
    SystemKind.QUARTIC4: lambda a, b, c: (b * b, (c, -a), (c, b)),
    SystemKind.QUARTIC5: lambda a, b, c: (b * b, (-a, c), (-a, b)),
    SystemKind.QUARTIC6: lambda a, b, c: (a * a, (-b, c), (-b, a)),
    SystemKind.QUARTIC7: lambda a, b, c: (a * a, (b, -c), (b, -a)),
    SystemKind.QUARTIC8: lambda a, b, c: (b * b, (a, -c), (a, -b)),
}

Term = tuple[int, str]


@dataclass(frozen=True)
class DiagonalEquation:
    """``sum(coef * var^2 for lhs) == sum(coef * var^2 for rhs)``."""

    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]

    @staticmethod
    def _side(terms, values) -> int:
        return sum(coef * values[var] ** 2 for coef, var in terms)

    def sides(self, values: dict[str, int]) -> tuple[int, int]:
        return self._side(self.lhs, values), self._side(self.rhs, values)

    def lhs_value(self, values: dict[str, int]) -> int:
        return self._side(self.lhs, values)

    def render(self) -> str:
        def side(terms):
            out = ""
            for i, (coef, var) in enumerate(terms):
                mono = f"{var}^2" if abs(coef) == 1 else f"{abs(coef)}*{var}^2"
                if i == 0:
                    out = ("-" if coef < 0 else "") + mono
                else:
                    out += (" - " if coef < 0 else " + ") + mono
            return out

        return f"{side(self.lhs)} = {side(self.rhs)}"


@dataclass(frozen=True)
class DiophantineSystem:
    which: SystemKind
    triple: CoefficientTriple
    equations: tuple[DiagonalEquation, ...]
    # |coefficient| whose square normalizes U1: U1 = lead * U
    lead: int

    def render(self) -> list[str]:
        return [eq.render() for eq in self.equations]


@dataclass(frozen=True)
class SystemSolution:
    """Values of the indeterminates.

    ``u1``/``u2`` are U', U'' for system 9 and U''', U'''' for system 10;
    ``u`` is the normalized factor with ``u1 = lead * u`` when it is an
    integer.  For quartics ``u`` is the homogeneous U coordinate.
    """

    u1: int
    u2: int
    w: int
    t: int
    v: int
    u: Optional[int] = None
    scaled: bool = False

    def values(self) -> dict[str, int]:
        out = {"U1": self.u1, "U2": self.u2, "W": self.w, "T": self.t, "V": self.v}
        if self.u is not None:
            out["U"] = self.u
        return out

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.u1, self.u2, self.w, self.t, self.v)

    def normalized(self, lead: int) -> Fraction:
        """``U1 / lead`` as an exact rational (integer only when lead divides U1)."""
        if self.u is not None:
            return Fraction(self.u)
        return Fraction(self.u1, lead)


def build_system(which: SystemKind, t: CoefficientTriple) -> DiophantineSystem:
    a, b, c = t.as_tuple()
    pyth = DiagonalEquation(((1, "W"), (1, "T")), ((1, "V"),))
    if which is SystemKind.SYSTEM9:
        eqs = (
            DiagonalEquation(((a, "V"), (b, "T")), ((1, "U1"),)),
            DiagonalEquation(((a, "W"), (c, "T")), ((1, "U2"),)),
            pyth,
        )
        return DiophantineSystem(which, t, eqs, abs(c))
    if which is SystemKind.SYSTEM10:
        eqs = (
            DiagonalEquation(((c, "V"), (-b, "T")), ((1, "U1"),)),
            DiagonalEquation(((c, "W"), (a, "T")), ((1, "U2"),)),
            pyth,
        )
        return DiophantineSystem(which, t, eqs, abs(a))
    lead_sq, (v1, t1), (w1, t2) = QUARTIC_TABLE[which](a, b, c)
    vt = ((v1, "V"), (t1, "T"))
    eqs = (
        DiagonalEquation(((lead_sq, "U"),), vt),
        DiagonalEquation(vt, ((w1, "W"), (t2, "T"))),
    )
    return DiophantineSystem(which, t, eqs, math.isqrt(lead_sq))


def check_solution(s: DiophantineSystem, sol: SystemSolution) -> list[ClaimResult]:
    """One record per equation plus a final ``side`` record for the side conditions."""
    values = sol.values()
    base = dict(triple=s.triple.as_tuple(), solution=sol.as_tuple(), system=s.which.value)
    results = []
    for i, eq in enumerate(s.equations, start=1):
        if s.which.is_quartic and "U" not in values:
            results.append(ClaimResult(f"eq{i}", False, None, None,
                                       note="quartic check needs U", **base))
            continue
        lhs, rhs = eq.sides(values)
        results.append(ClaimResult(f"eq{i}", lhs == rhs, lhs, rhs, note=eq.render(), **base))
    nonzero = 0 not in (sol.w, sol.t, sol.v)
    g = math.gcd(math.gcd(sol.w, sol.t), sol.v)
    coprime = g == 1 or sol.scaled
    note = []
    if not nonzero:
        note.append("W, T, V must be nonzero")
    if not coprime:
        note.append(f"gcd(W, T, V) = {g}")
    results.append(ClaimResult("side", nonzero and coprime, g, 1,
                               note="; ".join(note), **base))
    return results


def solution_holds(results: list[ClaimResult]) -> bool:
    return all(r.holds for r in results)


def _candidate_legs(pq_bound: int, allow_swap: bool, max_scale: int):
    out = []
    for tr in primitive_by_p(pq_bound):
        orientations = [(tr.w, tr.t, tr.v)]
        if allow_swap:
            orientations.append((tr.t, tr.w, tr.v))
        for k in range(1, max_scale + 1):
            for w, t, v in orientations:
                out.append((k * w, k * t, k * v, k > 1))
    return out


def _scan(s: DiophantineSystem, legs) -> list[SystemSolution]:
    hits = []
    lead = s.lead
    eq1, eq2 = s.equations[0], s.equations[1]
    for w, t, v, scaled in legs:
        values = {"W": w, "T": t, "V": v}
        if s.which.is_quartic:
            f1, f2 = eq2.sides(values)
            if f1 != f2 or f1 <= 0 or f1 % (lead * lead):
                continue
            u = is_perfect_square(f1 // (lead * lead))
            if u is None:
                continue
            hits.append(SystemSolution(lead * u, lead * u, w, t, v, u=u, scaled=scaled))
            continue
        r1 = is_perfect_square(eq1.lhs_value(values))
        if r1 is None:
            continue
        r2 = is_perfect_square(eq2.lhs_value(values))
        if r2 is None:
            continue
        u = r1 // lead if r1 % lead == 0 else None
        hits.append(SystemSolution(r1, r2, w, t, v, u=u, scaled=scaled))
    return hits


def enumerate_solutions(s: DiophantineSystem, pq_bound: int, allow_swap: bool = False,
                        max_scale: int = 1, jobs: int = 1) -> list[SystemSolution]:
    """Search the system over Pythagorean ``(W, T, V)`` generated by ``p <= pq_bound``.

    U1, U2 are the nonnegative square roots of the evaluated forms.  Results
    are sorted by V, then W, then T.
    """
    if pq_bound < 2:
        raise InvalidParameters("pq_bound must be >= 2")
    if max_scale < 1:
        raise InvalidParameters("max_scale must be >= 1")
    legs = _candidate_legs(pq_bound, allow_swap, max_scale)
    hits = map_partitions(partial(_scan, s), chunked(legs, jobs), jobs)
    return sorted(hits, key=lambda h: (h.v, h.w, h.t))


@dataclass(frozen=True)
class JointReport:
    triple: tuple[int, int, int]
    pq_bound: int
    shared_wtv: bool
    system9: tuple[SystemSolution, ...]
    system10: tuple[SystemSolution, ...]
    # (system9 solution, system10 solution, same orientation?)
    shared_pairs: tuple[tuple[SystemSolution, SystemSolution, bool], ...]

    @property
    def solvable9(self) -> bool:
        return bool(self.system9)

    @property
    def solvable10(self) -> bool:
        return bool(self.system10)

    @property
    def jointly_solvable(self) -> bool:
        """Within the search bound only; False never means proven unsolvable."""
        if self.shared_wtv:
            return bool(self.shared_pairs)
        return self.solvable9 and self.solvable10


def joint_solvability(t: CoefficientTriple, pq_bound: int, shared_wtv: bool,
                      jobs: int = 1) -> JointReport:
    """Search both systems and report whether they are solvable together.

    With ``shared_wtv`` a pair counts only when both solutions use the same
    Pythagorean triangle; legs swapped between the systems still count as the
    same triangle and the pair records whether the orientation matches.
    """
    s9 = enumerate_solutions(build_system(SystemKind.SYSTEM9, t), pq_bound, True, jobs=jobs)
    s10 = enumerate_solutions(build_system(SystemKind.SYSTEM10, t), pq_bound, True, jobs=jobs)
    pairs = []
    for x in s9:
        for y in s10:
            if x.v == y.v and sorted((x.w, x.t)) == sorted((y.w, y.t)):
                pairs.append((x, y, (x.w, x.t) == (y.w, y.t)))
    return JointReport(t.as_tuple(), pq_bound, shared_wtv, tuple(s9), tuple(s10), tuple(pairs))
