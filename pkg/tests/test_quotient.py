from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onesided.algebra import (
    Element1,
    Element2,
    matrix_unit1,
    matrix_unit_factor,
    x1,
    x2,
    y2,
)
from onesided.errors import NotInScalarPlusIdeal
from onesided.quotient import (
    BlockOverS1,
    Laurent,
    LaurentMatrix,
    from_block,
    laurent_det,
    lift_laurent,
    psi1,
    psi_pair,
    symbol_matrix,
    to_block,
)

from strategies import element1, element2, f_element, laurent

X = Laurent.monomial(1)


def test_psi1_examples():
    assert psi1(Element1.xy(3, 1)) == X ** 2
    assert psi1(matrix_unit1(2, 5)) == 0
    assert psi1(1 + Element1.y(2)) == 1 + Laurent.monomial(-2)


def test_laurent_basics():
    p = Laurent({-2: 1, 0: 1, 3: -2})
    assert (p.topdeg(), p.botdeg(), p.size()) == (3, -2, 5)
    assert not p.is_unit()
    u = Laurent.monomial(4, 3)
    assert u.is_unit() and u * u.inverse() == 1


def test_laurent_divmod():
    a = Laurent({0: 1, 2: 1, 3: 5})
    b = Laurent({0: 1, 1: 1})
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.size() < b.size()


def test_to_block_example():
    b = to_block(1, 1 + matrix_unit_factor(1, 0, 1) * x2())
    assert b.size == 2 and b.c == 1
    assert b.entries[0][1] == Element1.x()
    assert not b.entries[0][0] and not b.entries[1][1]


def test_to_block_rejects_outside_ideal():
    with pytest.raises(NotInScalarPlusIdeal):
        to_block(1, 1 + x1())
    with pytest.raises(ValueError):
        to_block(3, Element2.one())


def test_symbol_examples():
    e00 = matrix_unit_factor(1, 0, 0)
    s = symbol_matrix(to_block(1, 1 + e00 * (x2() - 1)))
    assert s.rows == [[X]]
    s = symbol_matrix(to_block(1, 1 + e00 * y2()))
    assert s.rows == [[1 + Laurent.monomial(-1)]]


def test_laurent_det_small():
    m = LaurentMatrix([[X, Laurent.const(1)], [Laurent.const(0), X ** 2]])
    assert laurent_det(m) == X ** 3
    assert laurent_det(LaurentMatrix([[X, X], [X, X]])) == 0
    assert laurent_det(LaurentMatrix.identity(3)) == 1


def test_symbol_normalizes_scalar():
    b = BlockOverS1.make(1, 2, [[Element1.x()]])
    # 2 + x E_00 is normalized to 1 + x/2 E_00
    assert symbol_matrix(b).rows == [[1 + Laurent.monomial(1, Fraction(1, 2))]]


def test_psi_pair():
    assert psi_pair(x1() * y2() * y2() + matrix_unit_factor(2, 0, 0) * x1()) == \
        {(1, -2): 1}


@given(element1(), element1())
def test_psi1_homomorphism(a, b):
    assert psi1(a * b) == psi1(a) * psi1(b)
    assert psi1(a + b) == psi1(a) + psi1(b)


@given(f_element())
def test_psi1_kills_F(f):
    assert psi1(f) == 0


@given(laurent())
def test_lift_is_a_section(p):
    assert psi1(lift_laurent(p)) == p


@given(laurent(), laurent())
def test_laurent_ring(p, q):
    assert p * q == q * p
    if q:
        d, r = p.divmod(q)
        assert d * q + r == p


def _blocks(factor):
    entry = element1(2, 2)
    return st.integers(1, 3).flatmap(lambda n: st.builds(
        lambda c, rows: BlockOverS1.make(factor, c, rows),
        st.integers(-2, 2),
        st.lists(st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n)))


@given(st.sampled_from((1, 2)).flatmap(lambda f: st.tuples(st.just(f), _blocks(f), _blocks(f))))
def test_block_round_trip_and_product(args):
    factor, a, b = args
    assert to_block(factor, from_block(a)) == a
    assert from_block(a @ b) == from_block(a) * from_block(b)


@given(_blocks(1).filter(lambda b: b.c != 0), _blocks(1).filter(lambda b: b.c != 0))
def test_symbol_det_multiplicative(a, b):
    da = laurent_det(symbol_matrix(a))
    db = laurent_det(symbol_matrix(b))
    dab = laurent_det(symbol_matrix(a @ b))
    assert dab == da * db


@given(element2())
def test_psi_pair_multiplicative_on_mult(a):
    b = x1() * y2() + 2
    pa, pb, pab = psi_pair(a), psi_pair(b), psi_pair(a * b)
    want = {}
    for (i, j), c in pa.items():
        for (k, l), d in pb.items():
            want[(i + k, j + l)] = want.get((i + k, j + l), 0) + c * d
    assert pab == {k: v for k, v in want.items() if v}


@given(element1(), f_element())
def test_kernel_of_psi1_is_F(a, f):
    from onesided.algebra import in_F

    assert in_F(a) == (psi1(a) == 0)
    assert in_F(f)
