from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from onesided import randoms
from onesided.algebra import (
    Element2,
    matrix_unit_factor,
    theta,
    theta_inverse,
    x1,
    y1,
)
from onesided.automorphisms import (
    Automorphism,
    Inner,
    Swap,
    Torus,
    compose,
    g2_generator_set,
    identity,
    inner,
    inner_F2,
    inner_theta,
    inner_x,
    invert,
    relations_hold,
    swap,
    torus,
    torus1,
)
from onesided.errors import NotUnit, PreconditionViolated

from strategies import element2

E = matrix_unit_factor
GENERATORS = g2_generator_set()


@lru_cache(maxsize=None)
def _unit(k):
    from onesided.units import unit_inverse

    u = randoms.unit(randoms.rng_for(k), length=1)
    return u, unit_inverse(u)


def test_torus_example():
    t = torus1(3)
    assert t(x1()) == x1().scale(3)
    assert t(y1()) == y1().scale(Fraction(1, 3))


def test_swap_example():
    assert swap()(E(1, 2, 1)) == E(2, 2, 1)


def test_inner_theta_relations():
    w = inner_theta()
    assert w(x1()) == theta() * x1() * theta_inverse()
    assert w(y1()) * w(x1()) == 1
    assert w.preserves_relations()


def test_inverses_of_letters():
    assert Torus(2, 5).inverse() == Torus(Fraction(1, 2), Fraction(1, 5))
    assert Swap().inverse() == Swap()
    assert Inner.of(theta()).inverse().u == theta_inverse()


def test_letter_preconditions():
    with pytest.raises(PreconditionViolated):
        Torus(0, 1)
    with pytest.raises(PreconditionViolated):
        inner_x(1, 0, 0, 1)
    with pytest.raises(PreconditionViolated):
        inner_F2(1, (0, 1), (0, 1))
    with pytest.raises(NotUnit):
        inner(x1())
    with pytest.raises(NotUnit):
        inner(theta(), theta())


def test_generator_set_labels():
    assert len(GENERATORS) == 10
    for label, g in GENERATORS:
        assert g.preserves_relations(), label


def test_word_order_rightmost_first():
    w = Automorphism((Swap(), Torus(2, 1)))
    # torus acts first, then the swap moves the scaled x1 to x2
    assert w(x1()) == Element2.gen("x2").scale(2)
    assert compose(swap(), torus(2)) == w


def test_text_round_trip():
    w = Automorphism((Swap(), Torus(2, Fraction(-1, 3)), Inner.of(theta())))
    assert Automorphism.parse(w.text()) == w


@settings(max_examples=20)
@given(element2())
def test_swap_conjugation_identity(a):
    lhs = swap() * inner_x(3, 2, 0, 1, factor=2) * invert(swap())
    rhs = inner_x(3, 2, 0, 1, factor=1)
    assert lhs(a) == rhs(a)


@settings(max_examples=20)
@given(element2(), st.integers(0, 4))
def test_torus_conjugation_identity(a, k):
    t = torus(Fraction(2, 3), -2)
    u, u_inv = _unit(k)
    lhs = t * inner(u, u_inv) * invert(t)
    rhs = inner(t(u), t(u_inv))
    assert lhs(a) == rhs(a)


@settings(max_examples=30)
@given(st.lists(st.integers(0, 9), min_size=1, max_size=3), element2(), element2())
def test_words_are_homomorphisms(picks, a, b):
    w = Automorphism(tuple(l for p in picks for l in GENERATORS[p][1].letters))
    assert w(a * b) == w(a) * w(b)
    assert w(a + b) == w(a) + w(b)
    assert w(1) == 1
    assert w.preserves_relations()


@settings(max_examples=30)
@given(st.lists(st.integers(0, 9), max_size=3), element2())
def test_inverse_word(picks, a):
    w = Automorphism(tuple(l for p in picks for l in GENERATORS[p][1].letters))
    assert invert(w)(w(a)) == a == w(invert(w)(a))
    assert (invert(swap()) * swap())(a) == identity()(a)


@settings(max_examples=15)
@given(st.integers(0, 4), st.integers(0, 4), element2())
def test_inner_composition(s1, s2, a):
    (u, u_inv), (v, v_inv) = _unit(s1), _unit(s2)
    assert (inner(u, u_inv) * inner(v, v_inv))(a) == inner(u * v, v_inv * u_inv)(a)


def test_relations_hold_detects_failure():
    assert not relations_hold((x1(), Element2.gen("x2"), x1(), Element2.gen("y2")))
