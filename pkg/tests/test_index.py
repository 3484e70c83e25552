import pytest
from hypothesis import given, settings, strategies as st

from onesided.action import oracle_index
from onesided.algebra import (
    Element1,
    Element2,
    matrix_unit1,
    matrix_unit_factor,
    membership,
    theta,
    theta_power,
    x2,
    y1,
    y2,
)
from onesided.errors import NotFredholm, NotInOnePlusA2
from onesided.index import index1, index_block, ind_component, split_parts
from onesided.quotient import BlockOverS1, to_block
from onesided import randoms

from strategies import f2_element, fredholm1

x, y = Element1.x(), Element1.y()
E = matrix_unit_factor


def u_m(m):
    return E(1, 0, 0) * x2() ** m + 1 - E(1, 0, 0)


@pytest.mark.parametrize("a, want", [
    (y ** 4, 4),
    (1 + matrix_unit1(0, 0), 0),
    (x + y, -1),
    (x ** 3, -3),
    (x * y, 0),
])
def test_index1_examples(a, want):
    assert index1(a).value == want


def test_index1_x_plus_y_matches_oracle_window():
    cert = index1(x + y, check=True)
    assert cert.oracle == -1 and cert.agrees()


def test_index1_rejects_F():
    with pytest.raises(NotFredholm):
        index1(matrix_unit1(2, 1))
    with pytest.raises(NotFredholm):
        index1(Element1.zero())


@pytest.mark.parametrize("m", [1, 2, 3])
def test_u_m_index(m):
    cert = index_block(to_block(1, u_m(m)), check=True)
    assert cert.value == cert.oracle == -m


def test_diag_style_block():
    a = E(1, 0, 0) * x2() + E(1, 1, 1) * y2() ** 2 + 1 - E(1, 0, 0) - E(1, 1, 1)
    cert = index_block(to_block(1, a), check=True)
    assert cert.value == cert.oracle == 1


def test_index_block_non_fredholm():
    with pytest.raises(NotFredholm):
        index_block(BlockOverS1.make(1, 0, [[Element1.one()]]))
    with pytest.raises(NotFredholm):
        # 1 - E_00 has symbol 0
        index_block(BlockOverS1.make(1, 1, [[Element1.scalar(-1)]]))


def test_split_parts_examples():
    a1, a2 = split_parts(theta())
    assert membership(a1, "p1") and membership(a2, "p2")
    assert membership(a1 - E(1, 0, 0) * (x2() - 1), "F2")
    assert membership(a2 - (y1() - 1) * E(2, 0, 0), "F2")
    assert split_parts(1 + E(1, 0, 0) * x2()) == (E(1, 0, 0) * x2(), Element2.zero())
    f = Element2.tensor(matrix_unit1(0, 1), matrix_unit1(1, 1))
    assert split_parts(1 + f) == (f, Element2.zero())
    with pytest.raises(NotInOnePlusA2):
        split_parts(Element2.gen("x1"))


def test_ind_components_theta():
    assert ind_component(1, theta()) == -1
    assert ind_component(2, theta()) == 1
    assert ind_component(2, theta_power(3)) == 3
    assert ind_component(1, theta_power(-2)) == 2
    with pytest.raises(ValueError):
        ind_component(3, theta())


@settings(max_examples=40)
@given(fredholm1())
def test_symbolic_agrees_with_oracle(a):
    cert = index1(a, check=True)
    assert cert.agrees()


@settings(max_examples=25)
@given(st.integers(0, 10_000), st.sampled_from((1, 2)))
def test_block_symbolic_agrees_with_oracle(seed, factor):
    rng = randoms.rng_for(seed)
    b = randoms.block(rng, factor, c=rng.choice((1, 2, -1)))
    try:
        cert = index_block(b)
    except NotFredholm:
        return
    assert oracle_index(b.to_element()) == cert.value


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_block_triangular_additivity(seed):
    rng = randoms.rng_for(seed)
    d0, d1 = randoms.fredholm1(rng), randoms.fredholm1(rng)
    top = randoms.element1(rng)
    b = BlockOverS1.make(1, 1, [[d0 - 1, top], [Element1.zero(), d1 - 1]])
    assert index_block(b).value == index1(d0).value + index1(d1).value


@settings(max_examples=40)
@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_ind_homomorphism_and_zero_sum(s1, s2):
    u = randoms.unit_a2(randoms.rng_for(s1))
    v = randoms.unit_a2(randoms.rng_for(s2))
    for i in (1, 2):
        assert ind_component(i, u * v) == ind_component(i, u) + ind_component(i, v)
    assert ind_component(1, u) + ind_component(2, u) == 0


@settings(max_examples=40)
@given(st.integers(0, 10_000), f2_element())
def test_overlap_choice_irrelevant(seed, f):
    u = randoms.unit_a2(randoms.rng_for(seed))
    a1, a2 = split_parts(u)
    from onesided.index import index_of_part

    assert index_of_part(1, a1 - f) == index_of_part(1, a1)
    assert index_of_part(2, a2 + f) == index_of_part(2, a2)


@settings(max_examples=30)
@given(f2_element())
def test_one_plus_F2_components(f):
    assert ind_component(1, 1 + f) == ind_component(2, 1 + f) == 0
