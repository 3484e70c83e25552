from fractions import Fraction

from hypothesis import given, strategies as st

from onesided.linalg import EchelonBasis, determinant, echelonize, nullspace, rank, solve_dense

vec = st.dictionaries(st.integers(0, 4), st.integers(-3, 3).filter(bool), max_size=4)


def test_rank_examples():
    assert rank([{0: 1}, {1: 1}, {0: 2, 1: 2}]) == 2
    assert rank([]) == 0
    assert rank([{}, {}]) == 0


def test_nullspace_example():
    ns = nullspace([{0: 1}, {0: 2}, {1: 1}])
    assert len(ns) == 1
    (c,) = ns
    assert c[0] * 1 + c[1] * 2 == 0 and 2 not in c


def test_determinant_and_inverse():
    m = {0: {0: 2, 1: 1}, 1: {0: 1, 1: 1}}
    assert determinant(m, [0, 1]) == 1
    assert determinant({0: {0: 1}, 1: {0: 1}}, [0, 1]) == 0
    inv = solve_dense([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    assert inv == [[1, -1], [-1, 2]]


def test_echelon_contains():
    b = EchelonBasis()
    b.add({0: 1, 1: 1})
    assert b.contains({0: 3, 1: 3})
    assert not b.contains({1: 1})


@given(st.lists(vec, max_size=6))
def test_rank_nullity(vs):
    assert rank(vs) + len(nullspace(vs)) == len(vs)


@given(st.lists(vec, max_size=6))
def test_nullspace_vectors_are_relations(vs):
    for combo in nullspace(vs):
        total = {}
        for j, c in combo.items():
            for k, v in vs[j].items():
                total[k] = total.get(k, 0) + c * v
        assert not any(total.values())


@given(st.lists(vec, max_size=6))
def test_echelonize_reduced(vs):
    rows = echelonize(vs)
    assert len(rows) == rank(vs)
    pivots = [min(r) for r in rows]
    for r, p in zip(rows, pivots):
        for q in pivots:
            if q != p:
                assert q not in r
