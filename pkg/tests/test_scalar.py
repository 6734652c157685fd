from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from quasifold.errors import FieldMismatch, ParseError
from quasifold.scalar import QQ, FieldSpec, Scalar, parse_scalar, render_scalar, sign

K5 = FieldSpec(5)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
radicands = st.sampled_from([2, 3, 5, 7, 13])


@st.composite
def scalars(draw, field=None):
    f = field if field is not None else FieldSpec(draw(radicands))
    b = draw(rationals) if not f.is_rational else 0
    return Scalar(draw(rationals), b, f)


@st.composite
def triples(draw):
    f = FieldSpec(draw(radicands))
    return draw(scalars(f)), draw(scalars(f)), draw(scalars(f))


def high_precision(x: Scalar):
    mpmath.mp.dps = 60
    return mpmath.mpf(x.a.numerator) / x.a.denominator + (
        mpmath.mpf(x.b.numerator) / x.b.denominator
    ) * mpmath.sqrt(x.field.radicand)


def test_radical_parts_cancel():
    assert K5(1, 1) + K5(2, -1) == K5(3, 0)
    assert (K5(1, 1) + K5(2, -1)).b == 0


def test_defining_relation():
    r5 = K5(0, 1)
    assert r5 * r5 == K5(5)


def test_inverse_by_conjugate():
    x = K5(1, 1)
    inv = 1 / x
    # oracle: the product with the input is exactly 1
    assert inv * x == 1
    assert inv == K5(Fraction(-1, 4), Fraction(1, 4))


@pytest.mark.parametrize(
    "x, expected",
    [(K5(0, 0), 0), (K5(1, -1), -1), (K5(-3, 2), 1), (K5(3, -2), -1), (K5(-2, -1), -1), (K5(0, 1), 1)],
)
def test_sign_examples(x, expected):
    assert sign(x) == expected
    assert mpmath.sign(high_precision(x)) == expected


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        K5(1, 1) / K5(0)
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        K5(1, 1) + FieldSpec(2)(1, 1)


@pytest.mark.parametrize("k", [4, 8, -1, 12])
def test_bad_radicand(k):
    with pytest.raises(ParseError):
        FieldSpec(k)


def test_radicand_one_is_rational():
    assert FieldSpec(1) == QQ
    with pytest.raises(ValueError):
        Scalar(1, 1, QQ)


def test_mixed_with_python_numbers():
    x = K5(1, 1)
    assert x + 1 == K5(2, 1)
    assert 2 * x == K5(2, 2)
    assert 1 - x == K5(0, -1)
    assert x / 2 == K5(Fraction(1, 2), Fraction(1, 2))
    assert Scalar(3) == 3 and hash(Scalar(3)) == hash(3)


@given(triples())
def test_field_axioms(t):
    x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x and x * y == y * x


@given(triples())
def test_sign_multiplicative(t):
    x, y, _ = t
    assert sign(x * y) == sign(x) * sign(y)
    assert (sign(x) == 0) == (not x)


@given(scalars())
def test_sign_matches_high_precision(x):
    assert sign(x) == int(mpmath.sign(high_precision(x)))


@given(scalars())
def test_inverse(x):
    if x:
        assert x * x.inverse() == 1


@given(triples())
def test_order_consistent(t):
    x, y, _ = t
    assert (x < y) == (high_precision(x) < high_precision(y))


@given(scalars())
def test_round_trip(x):
    assert parse_scalar(render_scalar(x), x.field) == x


def test_text_forms():
    assert render_scalar(Scalar(Fraction(-3, 4))) == "-3/4"
    assert render_scalar(K5(1, Fraction(1, 2))) == {"a": "1", "b": "1/2"}
    assert parse_scalar("7", QQ) == 7
    assert parse_scalar({"a": "1/2", "b": "-1/2"}, K5) == K5(Fraction(1, 2), Fraction(-1, 2))


@pytest.mark.parametrize("bad", ["abc", "1/0", None, True, [1], {"a": "1", "c": "2"}])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_scalar(bad, K5)


def test_sqrt_part_needs_field():
    with pytest.raises(ParseError):
        parse_scalar({"a": "1", "b": "1"}, QQ)


def test_immutable():
    x = K5(1, 1)
    with pytest.raises(AttributeError):
        x.a = 2
