"""Hypothesis strategies for elements of S_1, S_2 and friends."""

from fractions import Fraction

from hypothesis import strategies as st

from onesided.algebra import Element1, Element2, matrix_unit1, matrix_unit2
from onesided.quotient import Laurent

small = st.integers(-4, 4)
nonzero = st.integers(-4, 4).filter(bool)
scalars = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_scalars = scalars.filter(bool)
exps = st.integers(0, 3)


def element1(max_exp=3, max_terms=4):
    key = st.tuples(st.integers(0, max_exp), st.integers(0, max_exp))
    return st.dictionaries(key, nonzero, max_size=max_terms).map(Element1)


def element2(max_exp=2, max_terms=4):
    key = st.tuples(*[st.integers(0, max_exp)] * 4)
    return st.dictionaries(key, nonzero, max_size=max_terms).map(Element2)


def f_element(size=4, max_terms=3):
    cell = st.tuples(st.integers(0, size - 1), st.integers(0, size - 1), nonzero)
    return st.lists(cell, max_size=max_terms).map(
        lambda cs: sum((matrix_unit1(i, j).scale(c) for i, j, c in cs), Element1.zero()))


def f2_element(size=3, max_terms=3):
    idx = st.tuples(st.integers(0, size - 1), st.integers(0, size - 1))
    cell = st.tuples(idx, idx, nonzero)
    return st.lists(cell, max_size=max_terms).map(
        lambda cs: sum((matrix_unit2(a, b).scale(c) for a, b, c in cs), Element2.zero()))


def laurent(span=3, max_terms=3):
    return st.dictionaries(st.integers(-span, span), nonzero, max_size=max_terms).map(Laurent)


def fredholm1():
    """Elements of S_1 outside F (nonzero Laurent symbol)."""
    from onesided.quotient import psi1

    return st.builds(lambda a, f: a + f, element1(), f_element()).filter(lambda a: bool(psi1(a)))
