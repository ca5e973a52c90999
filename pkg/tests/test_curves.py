from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from diolab.curves import (
    CoefficientTriple,
    CubicCurve,
    DoubleEquation,
    a2_coefficient_match,
    condition_star,
    cubic_from_roots,
    curve_eight,
    curve_membership,
    curve_six,
    discriminant_quantity,
    double_to_cubic,
    frey_curve,
    midpoint_identity_check,
    reflect_transform,
)
from diolab.errors import DegenerateCurve, InvalidTriple
from oracles import eval_cubic, expand_roots

T7 = CoefficientTriple(7, 9, 16)
T9 = CoefficientTriple(9, 16, 25)
T1 = CoefficientTriple(1, 1, 2)


def coeffs(curve):
    return tuple(curve.coefficients)


@st.composite
def triples(draw, limit=10**6):
    a = draw(st.integers(-limit, limit).filter(bool))
    b = draw(st.integers(-limit, limit).filter(bool))
    assume(a + b != 0)
    try:
        return CoefficientTriple.from_ab(a, b)
    except InvalidTriple:
        assume(False)


class TestTriple:
    def test_valid(self):
        assert T7.as_tuple() == (7, 9, 16)

    @pytest.mark.parametrize("abc", [(7, 9, 17), (0, 1, 1), (2, 2, 4), (3, 6, 9)])
    def test_invalid(self, abc):
        with pytest.raises(InvalidTriple):
            CoefficientTriple(*abc)

    def test_power_certificates(self):
        t = CoefficientTriple(-64, 125, 61, exponent=1, bases=(-64, 125, 61))
        assert t.bases == (-64, 125, 61)
        assert CoefficientTriple(9, 16, 25, exponent=2, bases=(3, 4, 5)).exponent == 2
        with pytest.raises(InvalidTriple):
            CoefficientTriple(9, 16, 25, exponent=2, bases=(3, 4, 6))
        with pytest.raises(InvalidTriple):
            CoefficientTriple(9, 16, 25, exponent=2)

    def test_negative_allowed(self):
        assert CoefficientTriple.from_ab(-7, 16).c == 9


class TestConditionStar:
    def test_examples(self):
        assert condition_star(DoubleEquation(4, 0, 5, 9, 0, 3))
        assert not condition_star(DoubleEquation(7, 0, 9, 1, 0, -1))
        assert condition_star(DoubleEquation(1, 0, 3, 1, 0, 4))

    def test_all_zero_form_rejected(self):
        with pytest.raises(ValueError):
            DoubleEquation(0, 0, 0, 1, 0, 1)


class TestDoubleToCubic:
    def test_nine_sixteen(self):
        curve = double_to_cubic(DoubleEquation(9, 0, 16, 1, 0, -1))
        assert coeffs(curve) == (1, 7, -144, 0)
        assert curve.factored() == "Y^2 = X(X - 9)(X + 16)"

    def test_negative_leading(self):
        assert coeffs(double_to_cubic(DoubleEquation(1, 0, 1, 1, 0, 1))) == (-1, 2, -1, 0)

    def test_seven_nine(self):
        assert double_to_cubic(DoubleEquation(7, 0, 9, 1, 0, -1)) == frey_curve(T7)

    def test_degenerate(self):
        with pytest.raises(DegenerateCurve):
            double_to_cubic(DoubleEquation(1, 0, 1, 1, 1, 1))

    def test_expansion_against_product(self):
        # X[(b'X - b)^2 - (a'X - a)(c'X - c)] evaluated pointwise
        d = DoubleEquation(3, -2, 5, 2, 3, -1)
        curve = double_to_cubic(d)
        for x in range(-5, 6):
            direct = x * ((d.bp * x - d.b) ** 2 - (d.ap * x - d.a) * (d.cp * x - d.c))
            assert curve.rhs(x) == direct


class TestNamedCurves:
    @pytest.mark.parametrize("t, expected", [(T7, (1, 2, -63, 0)), (T9, (1, 7, -144, 0)), (T1, (1, 0, -1, 0))])
    def test_frey(self, t, expected):
        assert coeffs(frey_curve(t)) == expected

    def test_six_and_eight(self):
        assert coeffs(curve_six(T7)) == (-1, 23, -112, 0)
        assert coeffs(curve_eight(T7)) == (1, -25, 144, 0)
        assert coeffs(curve_six(T1)) == expand_roots(-1, (0, 1, 2))

    def test_display(self):
        assert str(frey_curve(T7)) == "Y^2 = X^3 + 2X^2 - 63X"
        assert frey_curve(T7).factored() == "Y^2 = X(X - 7)(X + 9)"
        assert CubicCurve(1, 0, 1, 1).factored() is None
        assert CubicCurve(1, 0, 1, 1).display() == "Y^2 = X^3 + X + 1"

    def test_zero_leading_rejected(self):
        with pytest.raises(DegenerateCurve):
            CubicCurve(0, 1, 1)


class TestReflection:
    def test_six_to_frey(self):
        assert reflect_transform(curve_six(T7), 7) == frey_curve(T7)

    def test_eight_to_six(self):
        assert reflect_transform(curve_eight(T7), 16) == curve_six(T7)

    def test_pure_cube(self):
        assert coeffs(reflect_transform(CubicCurve(1, 0, 0, 0), 0)) == (-1, 0, 0, 0)

    def test_pointwise(self):
        curve = CubicCurve(2, -3, 5, 7)
        image = reflect_transform(curve, Fraction(3, 2))
        for x in range(-4, 5):
            assert image.rhs(x) == curve.rhs(Fraction(3, 2) - x)


class TestDiscriminantAndMidpoint:
    @pytest.mark.parametrize("t, value", [(T7, 16), (T9, 25), (T1, 2)])
    def test_discriminant(self, t, value):
        assert discriminant_quantity(t) == value

    def test_midpoint(self):
        assert midpoint_identity_check(T7)
        assert midpoint_identity_check(T1)
        assert not midpoint_identity_check(CoefficientTriple.unchecked(7, 9, 17))


class TestMembership:
    def test_examples(self):
        cube_minus_x = frey_curve(T1)
        assert curve_membership(cube_minus_x, 0, 0)
        assert not curve_membership(cube_minus_x, 2, Fraction(5, 2))
        assert curve_membership(curve_eight(T7), Fraction(256, 9), Fraction(2240, 27))


class TestA2:
    @pytest.mark.parametrize("t, expected", [(T7, (7, 0, 9, 1, 0, -1)), (T9, (9, 0, 16, 1, 0, -1))])
    def test_examples(self, t, expected):
        assert a2_coefficient_match(t).as_tuple() == expected

    def test_round_trip_unit(self):
        assert double_to_cubic(a2_coefficient_match(T1)) == frey_curve(T1)


@given(triples())
def test_discriminant_is_abs_c(t):
    assert discriminant_quantity(t) == abs(t.c)


@given(triples(), st.integers(-10**6, 10**6))
def test_reflection_is_involution(t, s):
    curve = frey_curve(t)
    assert reflect_transform(reflect_transform(curve, s), s) == curve


@given(triples())
def test_reflection_chain(t):
    assert reflect_transform(curve_six(t), t.a) == frey_curve(t)
    assert reflect_transform(curve_eight(t), t.c) == curve_six(t)


@given(triples(10**4), st.integers(-5, 5))
def test_midpoint_exactly_when_sum_holds(t, shift):
    perturbed = CoefficientTriple.unchecked(t.a, t.b, t.c + shift)
    assert midpoint_identity_check(perturbed) is (shift == 0)


@given(triples())
def test_a2_round_trip(t):
    assert double_to_cubic(a2_coefficient_match(t)) == frey_curve(t)


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30), st.integers(-3, 3).filter(bool))
def test_cubic_from_roots_matches_vieta(r1, r2, r3, lead):
    curve = cubic_from_roots(lead, r1, r2, r3)
    assert coeffs(curve) == expand_roots(lead, (r1, r2, r3))
    for x in (r1, r2, r3):
        assert curve.rhs(x) == 0 == eval_cubic(expand_roots(lead, (r1, r2, r3)), x)
