import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diolab.errors import InvalidParameters
from diolab.pythagoras import (
    PythagoreanTriple,
    enumerate_primitive,
    primitive_by_p,
    square_area_search,
    squares_in_ap_search,
    triple_from,
)
from oracles import primitive_legs_by_scan, square_root


@pytest.mark.parametrize("pqk, legs", [((2, 1, 1), (4, 3, 5)), ((3, 2, 1), (12, 5, 13)), ((2, 1, 3), (12, 9, 15))])
def test_triple_from(pqk, legs):
    assert triple_from(*pqk).legs() == legs


@pytest.mark.parametrize("pqk", [(1, 2, 1), (2, 0, 1), (3, 1, 1), (4, 2, 1), (2, 1, 0)])
def test_triple_from_rejects(pqk):
    with pytest.raises(InvalidParameters):
        triple_from(*pqk)


def test_non_primitive_generator_allowed_when_scaled():
    assert triple_from(3, 1, 2).legs() == (12, 16, 20)


def test_inconsistent_fields_rejected():
    with pytest.raises(InvalidParameters):
        PythagoreanTriple(2, 1, 1, 4, 3, 6)


def test_enumerate_small_bounds():
    assert [tr.legs() for tr in enumerate_primitive(5)] == [(4, 3, 5)]
    assert enumerate_primitive(4) == []


def test_enumerate_thirty():
    legs = [tr.legs() for tr in enumerate_primitive(30)]
    assert legs == [(4, 3, 5), (12, 5, 13), (8, 15, 17), (24, 7, 25), (20, 21, 29)]


def test_enumerate_matches_leg_scan():
    ours = sorted(tr.legs() for tr in primitive_by_p(12))
    assert ours == sorted(primitive_legs_by_scan(12))


def test_enumerate_primitive_against_direct_scan():
    bound = 200
    direct = set()
    for w in range(1, bound):
        for t in range(1, bound):
            v = square_root(w * w + t * t)
            if v and v <= bound and w % 2 == 0 and math.gcd(w, t) == 1:
                direct.add((w, t, v))
    assert {tr.legs() for tr in enumerate_primitive(bound)} == direct


def test_square_area_examples():
    assert square_area_search(5) == []
    assert square_area_search(100) == []


def test_square_area_against_naive_scan():
    # every right triangle with V <= 120, by legs directly
    naive = [(w, t) for w in range(1, 120) for t in range(1, 120)
             if (v := square_root(w * w + t * t)) and v <= 120 and square_root(w * t // 2) is not None
             and (w * t) % 2 == 0]
    assert naive == [] and square_area_search(120) == []


def test_square_area_bound_check():
    with pytest.raises(InvalidParameters):
        square_area_search(4)


def test_squares_in_ap():
    found = squares_in_ap_search(7)
    assert [(e.r2, e.s2, e.t2, e.d) for e in found] == [(1, 25, 49, 24)]
    assert not found[0].difference_is_square
    assert squares_in_ap_search(1) == []


def test_squares_in_ap_against_triple_loop():
    bound = 40
    naive = [(r * r, s * s, t * t) for r in range(1, bound + 1) for s in range(r + 1, bound + 1)
             for t in range(s + 1, bound + 1) if s * s - r * r == t * t - s * s]
    assert [(e.r2, e.s2, e.t2) for e in squares_in_ap_search(bound)] == naive


def test_squares_in_ap_no_square_difference():
    assert all(not e.difference_is_square for e in squares_in_ap_search(50))


@given(st.integers(5, 400), st.integers(5, 400))
def test_enumeration_prefix(b1, b2):
    lo, hi = sorted((b1, b2))
    assert enumerate_primitive(hi)[: len(enumerate_primitive(lo))] == enumerate_primitive(lo)


@given(st.integers(5, 600))
def test_enumerated_triples_primitive(bound):
    for tr in enumerate_primitive(bound):
        assert math.gcd(math.gcd(tr.w, tr.t), tr.v) == 1
        assert tr.w**2 + tr.t**2 == tr.v**2
        assert tr.w % 2 == 0 and tr.t % 2 == 1


def test_parallel_matches_serial():
    assert squares_in_ap_search(120, jobs=3) == squares_in_ap_search(120)
    assert square_area_search(300, jobs=3) == square_area_search(300)
