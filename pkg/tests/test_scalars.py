from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onesided.scalars import GF, QQ, Fp, K, fmt_scalar, get_field, parse_field, use_field


def test_default_field_is_rational():
    assert get_field() is QQ
    assert K(3) == Fraction(3)
    assert K(Fraction(1, 2)) + K(Fraction(1, 2)) == 1


def test_fp_arithmetic():
    with use_field(GF(7)):
        a = K(3)
        assert isinstance(a, Fp)
        assert a * K(5) == 1
        assert 1 / a == 5
        assert K(Fraction(1, 2)) == 4
        assert -a == 4
        assert a ** -1 == 5
        assert fmt_scalar(K(6)) == "6"


def test_field_context_restores():
    with use_field(GF(5)):
        assert get_field() != QQ
    assert get_field() is QQ


@pytest.mark.parametrize("text", ["fp:4", "fp:1", "fp:x", "complex"])
def test_bad_field_names(text):
    with pytest.raises(ValueError):
        parse_field(text)


def test_parse_field_ok():
    assert parse_field("rational") is QQ
    assert parse_field("fp:11") == GF(11)


@given(st.integers(-50, 50), st.integers(-50, 50).filter(lambda v: v % 13))
def test_fp_division_inverts_multiplication(a, b):
    with use_field(GF(13)):
        x, y = K(a), K(b)
        assert (x / y) * y == x
        assert x - y + y == x


def test_fmt_scalar_fractions():
    assert fmt_scalar(Fraction(-3, 4)) == "-3/4"
    assert fmt_scalar(Fraction(5)) == "5"
