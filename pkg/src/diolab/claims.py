"""Executable registry of the identities and deductions about systems 9 and 10.

Each entry evaluates one numbered identity on a concrete ``(triple,
solution)`` pair and returns a :class:`ClaimResult`.  Claims that fail on a
concrete instance are recorded with ``holds=False``; the registry describes,
it never raises on a failed assertion.

Notation inside formulas: ``a, b, c`` are the triple, ``U`` the normalized
factor ``U1 / |c|`` (system 9) and ``U''`` the factor ``U1 / |a|`` (system 10).
When the division is not exact these factors are carried as exact rationals
and the note says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from diolab.curves import CoefficientTriple
from diolab.errors import UnknownClaim
from diolab.numeric import is_perfect_square, is_square_fraction
from diolab.records import ClaimResult
from diolab.systems import (
    SystemKind,
    SystemSolution,
    build_system,
    check_solution,
    enumerate_solutions,
)

S9 = SystemKind.SYSTEM9
S10 = SystemKind.SYSTEM10


@dataclass(frozen=True)
class Claim:
    claim_id: str
    formula: str
    label: str
    systems: tuple[SystemKind, ...]
    evaluate: Callable[[CoefficientTriple, SystemSolution], dict]

    def row(self) -> dict:
        return {
            "id": self.claim_id,
            "formula": self.formula,
            "label": self.label,
            "systems": [s.value for s in self.systems],
        }


def _integer(x: Fraction) -> Optional[int]:
    return x.numerator if x.denominator == 1 else None


def _norm(t: CoefficientTriple, sol: SystemSolution, primed: bool) -> Fraction:
    return sol.normalized(abs(t.a) if primed else abs(t.c))


def _norm_note(u: Fraction, name: str) -> str:
    if u.denominator == 1:
        return f"{name} = {u.numerator}"
    return f"{name} = {u.numerator}/{u.denominator} is not an integer"


def _eq(lhs, rhs, note="", **details):
    return {"holds": lhs == rhs, "lhs": lhs, "rhs": rhs, "note": note, "details": details}


# --- identities shared by both systems -------------------------------------

def _c11(t, s):
    a, b, c = t.as_tuple()
    return _eq(a * s.v**2 + b * s.t**2, a * s.w**2 + c * s.t**2)


def _c12(t, s):
    a, b, c = t.as_tuple()
    return _eq(c * s.v**2 - b * s.t**2, c * s.w**2 + a * s.t**2)


def _c13(t, s):
    a, b, c = t.as_tuple()
    return _eq(a * (s.v**2 - s.w**2), (c - b) * s.t**2)


def _c14(t, s):
    a, b, c = t.as_tuple()
    return _eq(c * (s.v**2 - s.w**2), (a + b) * s.t**2)


# --- system 9 chain -----------------------------------------------------------

def _normalized_triple_equality(first, second, u1, lead, name):
    u = Fraction(u1, lead)
    equal = first == second == u1 * u1
    integral = u.denominator == 1 and u != 0
    note = _norm_note(u, name)
    if not equal:
        note = "forms differ; " + note
    return {"holds": equal and integral, "lhs": first, "rhs": second,
            "note": note, "details": {name: u}}


def _c16(t, s):
    a, b, c = t.as_tuple()
    return _normalized_triple_equality(a * s.v**2 + b * s.t**2, a * s.w**2 + c * s.t**2,
                                       s.u1, abs(c), "U")


def _c18(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _eq(a * (s.v**2 - c * u * u), b * (c * u * u - s.t**2),
               _norm_note(u, "U"), U=u)


def _proportionality(m1: Fraction, m2: Fraction, u: Fraction, name: str):
    integral = m1 == m2 and m1.denominator == 1
    if m1 != m2:
        note = "no common factor of proportionality"
    elif integral:
        note = f"m = {m1.numerator}"
    else:
        note = f"m = {m1} is not an integer"
    note += "; " + _norm_note(u, name)
    return {"holds": integral, "lhs": m1, "rhs": m2, "note": note,
            "details": {"m": m1 if m1 == m2 else None, name: u}}


def _c19(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _proportionality((c * u * u - s.t**2) / Fraction(a),
                            (s.v**2 - c * u * u) / Fraction(b), u, "U")


def _c20(t, s):
    a, b, c = t.as_tuple()
    diff = s.v**2 - s.t**2
    m = Fraction(diff, c)
    ok = diff == s.w**2 and m.denominator == 1
    note = f"m = {m.numerator}" if m.denominator == 1 else f"m*{c} = {diff} has no integer m"
    return {"holds": ok, "lhs": diff, "rhs": s.w**2, "note": note, "details": {"m": m}}


def _c21(t, s):
    a, b, c = t.as_tuple()
    ok = c + b == s.w**2 + s.t**2 == s.v**2
    return {"holds": ok, "lhs": c + b, "rhs": s.v**2, "note": "", "details": {}}


def _c22(t, s):
    a, b, c = t.as_tuple()
    lhs, rhs = c - b, s.w**2 - s.t**2
    r = is_perfect_square(-lhs)
    ok = lhs == rhs and r is not None and r > 0
    if r is None or r == 0:
        note = f"X1^n = {lhs} is not of the form -R^2"
    else:
        note = f"R = {r}"
    if lhs != rhs:
        note += f"; c - b = {lhs} but W^2 - T^2 = {rhs}"
    return {"holds": ok, "lhs": lhs, "rhs": rhs, "note": note, "details": {"R": r}}


def _square_predicate(lhs: int, rhs: int, what: str):
    r = is_perfect_square(lhs)
    ok = r is not None and r > 0
    note = f"{what} = {r}^2" if ok else f"{what} = {lhs} is not a nonzero square"
    return {"holds": ok, "lhs": lhs, "rhs": rhs, "note": note, "details": {"root": r}}


def _c23(t, s):
    # (T^2 - W^2) V^2 is R^2 V^2 with R^2 taken from the previous step
    return _square_predicate(s.t**4 - s.w**4, (s.t**2 - s.w**2) * s.v**2, "T^4 - W^4")


def _c25(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _eq(u * u * c * c + s.w**2 * b, s.v**2 * c, _norm_note(u, "U"), U=u)


def _quadratic_roots(qa: Fraction, qb: Fraction, disc: Fraction):
    """Roots of qa*x^2 + qb*x + qc with the given discriminant, or None if irrational."""
    n = is_square_fraction(disc)
    if n is None:
        return None, None
    return n, sorted({(-qb + n) / (2 * qa), (-qb - n) / (2 * qa)})


def _c26_generic(u: Fraction, qb: Fraction, disc: Fraction, target: int, name: str):
    n, roots = _quadratic_roots(u * u, qb, disc)
    if roots is None:
        return {"holds": False, "lhs": target, "rhs": None,
                "note": f"discriminant {disc} is not a square; " + _norm_note(u, name),
                "details": {"N": None, "roots": None, name: u}}
    ok = Fraction(target) in roots
    match = Fraction(target) if ok else roots[-1]
    return {"holds": ok, "lhs": target, "rhs": match,
            "note": _norm_note(u, name), "details": {"N": n, "roots": roots, name: u}}


def _c26(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    disc = Fraction(s.v**4) - 4 * u * u * s.w**2 * b
    return _c26_generic(u, Fraction(-s.v**2), disc, c, "U")


def _discriminant_square(disc: Fraction, u: Fraction, name: str):
    n = is_square_fraction(disc)
    ok = n is not None and (u.denominator != 1 or n.denominator == 1)
    note = _norm_note(u, name)
    if n is None:
        note = f"{disc} is not a square; " + note
    return {"holds": ok, "lhs": disc, "rhs": None if n is None else n * n,
            "note": note, "details": {"N": n, name: u}}


def _c27(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _discriminant_square(Fraction(s.v**4) - 4 * u * u * s.w**2 * b, u, "U")


def _instance(n, u, w, coef, z, sign, name):
    """Extract (x, y, z) with x^2 + sign*y^2 = z^4 from x = N, y = 2*u*w*sqrt(coef)."""
    root = is_perfect_square(coef)
    if n is None:
        return {"holds": False, "lhs": None, "rhs": z**4,
                "note": "discriminant is not a square", "details": {"instance": None}}
    if root is None:
        return {"holds": False, "lhs": None, "rhs": z**4,
                "note": f"{coef} is not a square, y is irrational", "details": {"instance": None}}
    x, y = n, 2 * u * w * root
    lhs = x * x + sign * y * y
    integral = x.denominator == 1 and y.denominator == 1
    ok = integral and lhs == z**4
    note = _norm_note(u, name)
    if not integral:
        note = "instance is not integral; " + note
    return {"holds": ok, "lhs": lhs, "rhs": z**4, "note": note,
            "details": {"instance": [x, y, z]}}


def _c28(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    n = is_square_fraction(Fraction(s.v**4) - 4 * u * u * s.w**2 * b)
    return _instance(n, u, s.w, b, s.v, 1, "U")


def _c29(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    disc = Fraction(s.v**4) - 4 * u * u * s.w**2 * b
    target = Fraction((s.t**2 - s.w**2) ** 2)
    ok = u == 1 and disc == target
    note = _norm_note(u, "U")
    if ok:
        note += f"; roots {{{s.t**2}, {s.w**2}}}"
    return {"holds": ok, "lhs": disc, "rhs": target, "note": note, "details": {"U": u}}


def _c37(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _eq((c - b) * c * c * u * u, a * (c * s.v**2 - b * s.w**2), _norm_note(u, "U"), U=u)


def _c39(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _eq(c * c * u * u, c * s.v**2 - b * s.w**2, _norm_note(u, "U"), U=u)


def _cm1(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    m = Fraction(s.w**2, c)
    return _eq(m * b, u * u * c, f"m = {m}; " + _norm_note(u, "U"), m=m, U=u)


def _cm2(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, False)
    return _eq(Fraction(b), u * u * c, _norm_note(u, "U"), U=u)


# --- system 10 chain ----------------------------------------------------------

def _c16p(t, s):
    a, b, c = t.as_tuple()
    return _normalized_triple_equality(c * s.v**2 - b * s.t**2, c * s.w**2 + a * s.t**2,
                                       s.u1, abs(a), "U''")


def _c18p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    return _eq(c * (s.v**2 - a * u * u), b * (s.t**2 - a * u * u),
               _norm_note(u, "U''"), **{"U''": u})


def _c19p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    return _proportionality((s.t**2 - a * u * u) / Fraction(c),
                            (s.v**2 - a * u * u) / Fraction(b), u, "U''")


def _c20p(t, s):
    a, b, c = t.as_tuple()
    diff = s.t**2 - s.v**2
    m = Fraction(diff, a)
    ok = diff == -s.w**2 and m.denominator == 1
    note = f"m = {m.numerator}" if m.denominator == 1 else f"m*{a} = {diff} has no integer m"
    return {"holds": ok, "lhs": diff, "rhs": -s.w**2, "note": note, "details": {"m": m}}


def _c21p(t, s):
    a, b, c = t.as_tuple()
    ok = c + a == s.v**2 - s.w**2 == s.t**2
    return {"holds": ok, "lhs": c + a, "rhs": s.v**2 - s.w**2, "note": "", "details": {}}


def _c22p(t, s):
    a, b, c = t.as_tuple()
    lhs, rhs = c - a, s.v**2 + s.w**2
    r = is_perfect_square(lhs)
    ok = lhs == rhs and r is not None and r > 0
    note = f"S = {r}" if r else f"Y1^n = {lhs} is not a nonzero square"
    if lhs != rhs:
        note += f"; c - a = {lhs} but V^2 + W^2 = {rhs}"
    return {"holds": ok, "lhs": lhs, "rhs": rhs, "note": note, "details": {"S": r}}


def _c23p(t, s):
    return _square_predicate(s.v**4 - s.w**4, (s.v**2 - s.w**2) * (s.v**2 + s.w**2),
                             "V^4 - W^4")


def _c25p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    return _eq(u * u * a * a, s.t**2 * a + s.w**2 * c, _norm_note(u, "U''"), **{"U''": u})


def _c26p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    disc = Fraction(s.t**4) + 4 * u * u * s.w**2 * c
    return _c26_generic(u, Fraction(-s.t**2), disc, a, "U''")


def _c27p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    return _discriminant_square(Fraction(s.t**4) + 4 * u * u * s.w**2 * c, u, "U''")


def _c28p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    n = is_square_fraction(Fraction(s.t**4) + 4 * u * u * s.w**2 * c)
    return _instance(n, u, s.w, c, s.t, -1, "U''")


def _c29p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    disc = Fraction(s.t**4) + 4 * u * u * s.w**2 * c
    target = Fraction((s.v**2 + s.w**2) ** 2)
    ok = u == 1 and disc == target
    note = _norm_note(u, "U''")
    if ok:
        note += f"; roots {{{s.v**2}, {-s.w**2}}}"
    return {"holds": ok, "lhs": disc, "rhs": target, "note": note, "details": {"U''": u}}


def _cm1p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    m = Fraction(-s.w**2, a)
    return _eq(m * c, -u * u * a, f"m = {m}; " + _norm_note(u, "U''"), m=m, **{"U''": u})


def _cm2p(t, s):
    a, b, c = t.as_tuple()
    u = _norm(t, s, True)
    return _eq(Fraction(c), -u * u * a, _norm_note(u, "U''"), **{"U''": u})


BOTH = (S9, S10)

REGISTRY: tuple[Claim, ...] = (
    Claim("C11", "a*V^2 + b*T^2 = a*W^2 + c*T^2", "first forms of system 9 agree", BOTH, _c11),
    Claim("C12", "c*V^2 - b*T^2 = c*W^2 + a*T^2", "first forms of system 10 agree", BOTH, _c12),
    Claim("C13", "a*(V^2 - W^2) = (c - b)*T^2", "system 9 forms reduced", BOTH, _c13),
    Claim("C14", "c*(V^2 - W^2) = (a + b)*T^2", "system 10 forms reduced", BOTH, _c14),
    Claim("C16", "c^2*U^2 = a*V^2 + b*T^2 = a*W^2 + c*T^2, U integer",
          "double equation with normalized U", (S9,), _c16),
    Claim("C18", "a*(V^2 - c*U^2) = b*(c*U^2 - T^2)", "common factors collected", (S9,), _c18),
    Claim("C19", "m*a = c*U^2 - T^2 and m*b = V^2 - c*U^2, m integer",
          "integer factor of proportionality", (S9,), _c19),
    Claim("C20", "m*c = V^2 - T^2 = W^2, m integer", "sum of the proportionality relations",
          (S9,), _c20),
    Claim("C21", "c + b = W^2 + T^2 = V^2", "sum with the Pythagorean relation", (S9,), _c21),
    Claim("C22", "c - b = W^2 - T^2 = a = -R^2", "difference is minus a square", (S9,), _c22),
    Claim("C23", "T^4 - W^4 = (R*V)^2", "quartic difference is a square", (S9,), _c23),
    Claim("C25", "U^2*c^2 - V^2*c + W^2*b = 0", "c is a root of the quadratic", (S9,), _c25),
    Claim("C26", "c in (V^2 +- sqrt(V^4 - 4*U^2*W^2*b)) / (2*U^2)",
          "roots of the quadratic in c", (S9,), _c26),
    Claim("C27", "V^4 - 4*U^2*W^2*b = N^2", "discriminant is a square", (S9,), _c27),
    Claim("C28", "N^2 + (2*U*W*sqrt(b))^2 = V^4 in integers", "instance of x^2 + y^2 = z^4",
          (S9,), _c28),
    Claim("C29", "U = 1 and roots = {T^2, W^2}", "roots at U = 1", (S9,), _c29),
    Claim("C36", "(V^2 - W^2)*a = (c - b)*T^2", "first quadric relation", (S9,), _c13),
    Claim("C37", "(c - b)*c^2*U^2 = a*(c*V^2 - b*W^2)", "second quadric relation", (S9,), _c37),
    Claim("C39", "c^2*U^2 = c*V^2 - b*W^2", "quadrics combined with Pythagoras", (S9,), _c39),
    Claim("CM1", "m*b = U^2*c with m = W^2/c", "first hypothesis, factor relation", (S9,), _cm1),
    Claim("CM2", "b = U^2*c", "first hypothesis with m = 1", (S9,), _cm2),
    Claim("C16p", "a^2*U''^2 = c*V^2 - b*T^2 = c*W^2 + a*T^2, U'' integer",
          "double equation with normalized U''", (S10,), _c16p),
    Claim("C18p", "c*(V^2 - a*U''^2) = b*(T^2 - a*U''^2)", "common factors collected",
          (S10,), _c18p),
    Claim("C19p", "m*c = T^2 - a*U''^2 and m*b = V^2 - a*U''^2, m integer",
          "integer factor of proportionality", (S10,), _c19p),
    Claim("C20p", "m*a = T^2 - V^2 = -W^2, m integer", "difference of the proportionality relations",
          (S10,), _c20p),
    Claim("C21p", "c + a = V^2 - W^2 = T^2", "sum with the Pythagorean relation", (S10,), _c21p),
    Claim("C22p", "c - a = b = V^2 + W^2 = S^2", "difference is a square", (S10,), _c22p),
    Claim("C23p", "V^4 - W^4 = (S*T)^2", "quartic difference is a square", (S10,), _c23p),
    Claim("C25p", "U''^2*a^2 - T^2*a - W^2*c = 0", "a is a root of the quadratic", (S10,), _c25p),
    Claim("C26p", "a in (T^2 +- sqrt(T^4 + 4*U''^2*W^2*c)) / (2*U''^2)",
          "roots of the quadratic in a", (S10,), _c26p),
    Claim("C27p", "T^4 + 4*U''^2*W^2*c = N^2", "discriminant is a square", (S10,), _c27p),
    Claim("C28p", "N^2 - (2*U''*W*sqrt(c))^2 = T^4 in integers", "instance of x^2 - y^2 = z^4",
          (S10,), _c28p),
    Claim("C29p", "U'' = 1 and roots = {V^2, -W^2}", "roots at U'' = 1", (S10,), _c29p),
    Claim("CM1p", "m*c = -U''^2*a with m = -W^2/a", "first hypothesis, factor relation",
          (S10,), _cm1p),
    Claim("CM2p", "c = -U''^2*a", "first hypothesis with m = 1", (S10,), _cm2p),
)

_BY_ID = {claim.claim_id: claim for claim in REGISTRY}


def registry_table() -> list[dict]:
    return [claim.row() for claim in REGISTRY]


def get_claim(claim_id: str) -> Claim:
    try:
        return _BY_ID[claim_id]
    except KeyError:
        raise UnknownClaim(claim_id) from None


def run_claim(claim_id: str, t: CoefficientTriple, sol: SystemSolution,
              system: Optional[SystemKind] = None) -> ClaimResult:
    claim = get_claim(claim_id)
    out = claim.evaluate(t, sol)
    return ClaimResult(
        claim_id=claim.claim_id,
        holds=bool(out["holds"]),
        lhs=out["lhs"],
        rhs=out["rhs"],
        note=out["note"],
        triple=t.as_tuple(),
        solution=sol.as_tuple(),
        system=(system or claim.systems[0]).value,
        details=out["details"],
    )


@dataclass(frozen=True)
class AuditResult:
    triple: tuple[int, int, int]
    pq_bound: int
    system9: tuple[SystemSolution, ...]
    system10: tuple[SystemSolution, ...]
    claims: tuple[ClaimResult, ...]
    # equation checks that failed on an enumerated solution; should stay empty
    violations: tuple[ClaimResult, ...]

    @property
    def findings(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.claims if not r.holds)


def run_audit(t: CoefficientTriple, pq_bound: int, jobs: int = 1) -> AuditResult:
    """Enumerate both systems (legs swappable) and run every applicable claim."""
    claims: list[ClaimResult] = []
    violations: list[ClaimResult] = []
    found = {}
    for kind in (S9, S10):
        system = build_system(kind, t)
        sols = enumerate_solutions(system, pq_bound, allow_swap=True, jobs=jobs)
        found[kind] = tuple(sols)
        for sol in sols:
            violations.extend(r for r in check_solution(system, sol) if not r.holds)
            for claim in REGISTRY:
                if kind in claim.systems:
                    claims.append(run_claim(claim.claim_id, t, sol, kind))
    return AuditResult(t.as_tuple(), pq_bound, found[S9], found[S10],
                       tuple(claims), tuple(violations))


def claims_audit(t: CoefficientTriple, pq_bound: int, jobs: int = 1) -> list[ClaimResult]:
    return list(run_audit(t, pq_bound, jobs).claims)
