from fractions import Fraction

import pytest
from hypothesis import given

from pgacalc.scalar import as_rational, format_rational, parse_rational

from conftest import nonzero_rationals, rationals


def test_add_is_exact():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)


def test_construction_canonicalizes():
    r = Fraction(2, 4)
    assert (r.numerator, r.denominator) == (1, 2)
    assert Fraction(0, 7).denominator == 1
    assert Fraction(3, -6) == Fraction(-1, 2) and Fraction(3, -6).denominator == 2


def test_self_division():
    assert Fraction(3, 7) / Fraction(3, 7) == 1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


@pytest.mark.parametrize("a, b, expected", [
    ("1/3", "1/2", -1), ("-1", "0", -1), ("2/6", "1/3", 0),
])
def test_cmp(a, b, expected):
    x, y = parse_rational(a), parse_rational(b)
    assert (x > y) - (x < y) == expected


@pytest.mark.parametrize("text, value", [("-3", Fraction(-3)), ("5/6", Fraction(5, 6)), ("4/8", Fraction(1, 2))])
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1 /2", "--1", "1/-2", "", "x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@pytest.mark.parametrize("value, text", [(Fraction(-3), "-3"), (Fraction(5, 6), "5/6"), (Fraction(0), "0"),
                                         (Fraction(-7, 2), "-7/2")])
def test_format(value, text):
    assert format_rational(value) == text


def test_as_rational_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)


@given(rationals)
def test_round_trip(r):
    assert parse_rational(format_rational(r)) == r


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0


@given(nonzero_rationals)
def test_inverse(a):
    assert a * (1 / a) == 1
