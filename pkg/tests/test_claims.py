from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from diolab.claims import REGISTRY, claims_audit, get_claim, registry_table, run_audit, run_claim
from diolab.curves import CoefficientTriple
from diolab.errors import UnknownClaim
from diolab.systems import SystemKind, SystemSolution, build_system, enumerate_solutions

T7 = CoefficientTriple(7, 9, 16)
W9 = SystemSolution(16, 16, 4, 3, 5, u=1)
W10 = SystemSolution(16, 16, 3, 4, 5)

# frozen from a hand evaluation of each formula on the two witnesses
SYSTEM9_HOLDS = {"C11", "C12", "C13", "C14", "C16", "C18", "C19", "C20", "C21", "C25", "C26",
                 "C27", "C28", "C29", "C36", "C37", "C39"}
SYSTEM9_FAILS = {"C22", "C23", "CM1", "CM2"}
SYSTEM10_HOLDS = {"C11", "C12", "C13", "C14", "C18p", "C25p", "C26p", "C27p"}
SYSTEM10_FAILS = {"C16p", "C19p", "C20p", "C21p", "C22p", "C23p", "C28p", "C29p", "CM1p", "CM2p"}


def test_registry_ids_unique_and_tabulated():
    ids = [c.claim_id for c in REGISTRY]
    assert len(ids) == len(set(ids))
    table = registry_table()
    assert [row["id"] for row in table] == ids
    assert all(set(row) == {"id", "formula", "label", "systems"} for row in table)


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        get_claim("C99")
    with pytest.raises(KeyError):
        run_claim("nope", T7, W9)


def test_c13_value():
    r = run_claim("C13", T7, W9)
    assert r.holds and r.lhs == r.rhs == 63


def test_c20_gives_m_one():
    r = run_claim("C20", T7, W9)
    assert r.holds and r.lhs == 16 and r.details["m"] == 1


def test_c20p_fails():
    r = run_claim("C20p", T7, W10)
    assert not r.holds
    assert r.lhs == -9 and r.details["m"] == Fraction(-9, 7)


def test_c22_fails_on_positive_a():
    r = run_claim("C22", T7, W9)
    assert not r.holds and r.lhs == 7


def test_c16p_normalization_is_rational():
    r = run_claim("C16p", T7, W10, SystemKind.SYSTEM10)
    assert not r.holds
    assert r.details["U''"] == Fraction(16, 7)
    assert r.system == "system10"


def test_c28_extracts_euler_instance():
    r = run_claim("C28", T7, W9)
    assert r.holds
    assert [abs(x) for x in r.details["instance"]] == [7, 24, 5]


def test_c26_roots():
    r = run_claim("C26", T7, W9)
    assert r.holds and r.details["roots"] == [9, 16]


def test_claim_matrix_on_witnesses():
    audit = run_audit(T7, 10)
    assert [s.as_tuple() for s in audit.system9] == [W9.as_tuple()]
    assert [s.as_tuple() for s in audit.system10] == [W10.as_tuple()]
    by_system = {"system9": {}, "system10": {}}
    for r in audit.claims:
        by_system[r.system][r.claim_id] = r.holds
    assert {k for k, v in by_system["system9"].items() if v} == SYSTEM9_HOLDS
    assert {k for k, v in by_system["system9"].items() if not v} == SYSTEM9_FAILS
    assert {k for k, v in by_system["system10"].items() if v} == SYSTEM10_HOLDS
    assert {k for k, v in by_system["system10"].items() if not v} == SYSTEM10_FAILS
    assert audit.violations == ()
    assert {r.claim_id for r in audit.findings} == SYSTEM9_FAILS | SYSTEM10_FAILS


def test_audit_empty_cases():
    assert claims_audit(CoefficientTriple(1, 1, 2), 10) == []
    assert claims_audit(CoefficientTriple(9, 16, 25), 10) == []


def test_audit_deterministic():
    first = [r.to_dict() for r in claims_audit(T7, 12)]
    assert first == [r.to_dict() for r in claims_audit(T7, 12, jobs=3)]


def test_claim_records_serialise():
    for r in claims_audit(T7, 10):
        d = r.to_dict()
        for key in ("lhs", "rhs"):
            assert d[key] is None or isinstance(d[key], (int, str))


@st.composite
def solved(draw):
    """A (triple, system 9 solution) pair built backwards from a Pythagorean triangle."""
    p = draw(st.integers(2, 12))
    q = draw(st.integers(1, p - 1))
    k = draw(st.integers(1, 3))
    w, t, v = k * 2 * p * q, k * (p * p - q * q), k * (p * p + q * q)
    a = draw(st.integers(-50, 50).filter(bool))
    b = draw(st.integers(-50, 50).filter(bool))
    try:
        tr = CoefficientTriple.from_ab(a, b)
    except ValueError:
        assume(False)
    return tr, w, t, v


@settings(max_examples=200)
@given(solved())
def test_linear_consequences_hold_whenever_forms_agree(case):
    # C11 and C13 are the same relation; C14 is C13 plus the Pythagorean identity
    tr, w, t, v = case
    sol = SystemSolution(1, 1, w, t, v, scaled=True)
    c11 = run_claim("C11", tr, sol)
    c13 = run_claim("C13", tr, sol)
    assert c11.holds == c13.holds
    if c13.holds:
        assert run_claim("C14", tr, sol).holds


@settings(max_examples=30)
@given(st.integers(-30, 30).filter(bool), st.integers(-30, 30).filter(bool))
def test_algebraic_consequences_on_found_solutions(a, b):
    try:
        tr = CoefficientTriple.from_ab(a, b)
    except ValueError:
        assume(False)
    for sol in enumerate_solutions(build_system(SystemKind.SYSTEM9, tr), 10, True):
        for cid in ("C11", "C13", "C14", "C16", "C18"):
            r = run_claim(cid, tr, sol)
            if cid == "C16" and sol.u is None:
                assert not r.holds  # U is not an integer, the integrality half fails
            else:
                assert r.holds, (tr, sol, cid)
    for sol in enumerate_solutions(build_system(SystemKind.SYSTEM10, tr), 10, True):
        for cid in ("C12", "C18p"):
            assert run_claim(cid, tr, sol).holds
