from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onesided.algebra import Element2, matrix_unit2, matrix_unit_factor, theta, x1, x2, y1, y2
from onesided.automorphisms import Swap, Torus
from onesided.errors import ParseError
from onesided.parser import (
    factors_in,
    parse,
    parse_auto_letter,
    parse_element,
    parse_element1,
    parse_letter,
    parse_scalar,
    tokenize,
)
from onesided.units import Elementary, MuU, MuUprime, ThetaPow

from strategies import element2


@pytest.mark.parametrize("text, want", [
    ("y1*x1", Element2.one()),
    ("x1*y1", 1 - matrix_unit_factor(1, 0, 0)),
    ("E(0,1)*E(1,1)", matrix_unit_factor(1, 0, 1)),
    ("E2(0,0)", matrix_unit_factor(2, 0, 0)),
    ("EE(1,0;0,1)", matrix_unit2((1, 0), (0, 1))),
    ("theta*theta^0", theta()),
    ("-x^2 + 1/2*y2", -x1() * x1() + y2().scale(Fraction(1, 2))),
    ("2*(x1 - y1)^2", ((x1() - y1()) * (x1() - y1())).scale(2)),
    ("x2 - x2 - x2", -x2()),
])
def test_parse_examples(text, want):
    assert parse_element(text) == want


@pytest.mark.parametrize("text, pos", [
    ("x1 +", 4),
    ("", 0),
    ("x1 $ y1", 3),
    ("q", 0),
    ("E(0 1)", 4),
    ("x1^-2", 3),
    ("1/0", 0),
    ("(x1", 3),
    ("x1 y1", 3),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position == pos


def test_tokenize_positions():
    toks = tokenize("  x1 + 3/4")
    assert [(t.kind, t.text, t.pos) for t in toks] == [
        ("name", "x1", 2), ("op", "+", 5), ("num", "3/4", 7), ("end", "", 10)]


def test_factors_in():
    assert factors_in(parse("x1*y1 + E(0,1)")) == {1}
    assert factors_in(parse("y2 + E2(0,0)")) == {2}
    assert factors_in(parse("theta")) == {1, 2}
    assert factors_in(parse("3")) == set()


def test_parse_element1_rejects_other_factor():
    assert parse_element1("x2^2 + 1", 2).max_exponent() == 2
    with pytest.raises(ParseError):
        parse_element1("x1 + x2", 2)


def test_parse_scalar():
    assert parse_scalar("-3/4") == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_scalar("x")
    with pytest.raises(ParseError):
        parse_scalar("1/0")


def test_parse_letters():
    assert parse_letter("E 1 0 1 x2") == Elementary(1, 0, 1, x2().restrict(2))
    assert parse_letter("MU 2 -1/3") == MuU(2, Fraction(-1, 3))
    assert parse_letter("MUP 5") == MuUprime(5)
    assert parse_letter("THETA -2") == ThetaPow(-2)
    for bad in ("E 1 0 x2", "MU x 2", "NOPE", ""):
        with pytest.raises(ParseError):
            parse_letter(bad)
    assert parse_auto_letter("S") == Swap()
    assert parse_auto_letter("T 2 -1/3") == Torus(2, Fraction(-1, 3))
    with pytest.raises(ParseError):
        parse_auto_letter("T 2")


def test_pretty_precedence():
    assert parse("(x1 - y1)*x2").pretty() == "(x1 - y1)*x2"
    assert parse("x1 - (y1 - x2)").pretty() == "x1 - (y1 - x2)"
    assert parse("-(x1)^2").pretty() == "-x1^2"
    assert parse("(-x1)^2").pretty() == "(-x1)^2"


@given(element2())
def test_printed_text_parses_back(a):
    assert parse_element(str(a)) == a


ATOMS = st.sampled_from(["x1", "y1", "x2", "y2", "theta", "E(0,1)", "E2(1,0)", "EE(0,1;1,0)", "2", "1/3"])


def _exprs():
    return st.recursive(
        ATOMS,
        lambda inner: st.one_of(
            st.tuples(inner, st.sampled_from(["+", "-", "*"]), inner).map(lambda t: "(%s %s %s)" % t),
            inner.map(lambda s: "-" + s),
            st.tuples(inner, st.integers(0, 2)).map(lambda t: "(%s)^%d" % t),
        ),
        max_leaves=5,
    )


@given(_exprs())
def test_pretty_round_trip(text):
    node = parse(text)
    again = parse(node.pretty())
    assert again == node
    assert again.evaluate() == node.evaluate()
