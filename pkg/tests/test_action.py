import pytest
from hypothesis import given, settings

from onesided.action import (
    Window,
    act,
    make_injective_correction,
    make_iso_correction,
    make_surjective_correction,
    operator_matrix,
    oracle_index,
    poly_text,
    stabilized_counts,
    truncated_counts,
    use_window_cap,
)
from onesided.algebra import (
    Element1,
    Element2,
    matrix_unit1,
    matrix_unit2,
    matrix_unit_factor,
    theta,
    x2,
    y1,
)
from onesided.errors import IndexNotZero, NoStabilization, PreconditionViolated

from strategies import element1, element2, f2_element, f_element, fredholm1

x, y = Element1.x(), Element1.y()
E1 = matrix_unit1


def test_act_examples():
    assert act(y, 0) == {}
    assert act(matrix_unit2((1, 2), (0, 0)), (0, 0)) == {(1, 2): 1}
    assert act(theta(), (1, 0)) == {(0, 0): 1}
    assert act(theta(), (0, 0)) == {(0, 1): 1}
    assert poly_text(act(theta(), (0, 3))) == "x2^4"


def test_theta_is_bijective_on_small_cube():
    images = [act(theta(), (a, b)) for a in range(6) for b in range(6)]
    assert all(len(i) == 1 for i in images)
    assert len({next(iter(i)) for i in images}) == 36


def test_operator_matrix_identity_and_shift():
    m = operator_matrix(Element1.one(), Window("degree", 3))
    assert m.dense() == [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    s = operator_matrix(x, Window("degree", 2))
    assert s.dense() == [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_operator_matrix_rank_one():
    m = operator_matrix(E1(0, 0), Window("degree", 2))
    assert m.dense() == [[1, 0, 0], [0, 0, 0], [0, 0, 0]]


def test_operator_matrix_rejects_mismatched_window():
    with pytest.raises(ValueError):
        operator_matrix(x, Window("cube", 2))
    with pytest.raises(ValueError):
        Window("ball", 2)


@pytest.mark.parametrize("a, want", [
    (x ** 3, -3),
    (y ** 2, 2),
    (1 + (y1() - 1) * matrix_unit_factor(2, 0, 0), 1),
    (1 + matrix_unit_factor(1, 0, 0) * (x2() - 1), -1),
    (Element1.one(), 0),
])
def test_oracle_examples(a, want):
    assert oracle_index(a) == want


def test_oracle_non_fredholm():
    with pytest.raises(NoStabilization):
        oracle_index(E1(0, 0) + E1(1, 1), cap=20)


def test_oracle_rejects_wrong_kind():
    with pytest.raises(PreconditionViolated):
        oracle_index(Element2.gen("x1"))
    with pytest.raises(ValueError):
        oracle_index(x, kind="weird")


def test_window_cap_context():
    # the oracle cannot stabilize inside a tiny cap
    with use_window_cap(5):
        with pytest.raises(NoStabilization):
            oracle_index(x ** 3)
    assert oracle_index(x ** 3) == -3


def test_strip_agrees_with_cube():
    a = 1 + matrix_unit_factor(1, 0, 1) * x2() + matrix_unit_factor(1, 1, 1) * (x2() - 1)
    strip = truncated_counts(a, 12)
    cube = truncated_counts(a, 12, base=Window("cube", 0))
    assert strip.index == cube.index == -1


def test_iso_correction_examples():
    assert make_iso_correction(x * y) == E1(0, 0)
    assert x * y ** 2 * x == x * y
    assert make_iso_correction(x * y ** 2 * x) == E1(0, 0)
    with pytest.raises(IndexNotZero):
        make_iso_correction(x)


def test_iso_correction_on_p1_part():
    a = 1 + matrix_unit_factor(1, 0, 0) * (x2() - 1) + matrix_unit_factor(1, 1, 1) * (Element2.gen("y2") - 1)
    f = make_iso_correction(a)
    assert oracle_index(a + f) == 0
    counts = stabilized_counts(a + f)
    assert counts.kernel == counts.cokernel == 0


def test_one_sided_corrections():
    assert make_injective_correction(x) == 0
    assert make_surjective_correction(y) == 0
    a = 1 - E1(0, 0) - E1(1, 1)
    f = make_injective_correction(a)
    counts = stabilized_counts(a + f)
    assert counts.kernel == 0 and counts.index == 0
    assert truncated_counts(a + f, 8).kernel == 0
    with pytest.raises(PreconditionViolated):
        make_injective_correction(y)
    with pytest.raises(PreconditionViolated):
        make_surjective_correction(x)


def test_corrections_preserve_index():
    a = y ** 2 * (1 + x)  # = y + y^2
    f = make_surjective_correction(a)
    counts = stabilized_counts(a + f)
    assert counts.cokernel == 0 and counts.index == oracle_index(a) == 1


@settings(max_examples=40)
@given(element1(), element1())
def test_faithful_homomorphism_s1(a, b):
    w = Window("degree", 6)
    mb = operator_matrix(b, w)
    big = Window("degree", mb.codomain.size)
    prod = operator_matrix(a, big) @ mb
    assert prod.columns == operator_matrix(a * b, w).columns


@settings(max_examples=30)
@given(element2(), element2())
def test_faithful_homomorphism_s2(a, b):
    w = Window("cube", 3)
    mb = operator_matrix(b, w)
    big = Window("cube", mb.codomain.size)
    prod = operator_matrix(a, big) @ mb
    assert prod.columns == operator_matrix(a * b, w).columns


@given(element2())
def test_faithful(a):
    m = operator_matrix(a, Window("cube", a.max_exponent() + 1))
    assert m.is_zero() == (not a)


@settings(max_examples=25)
@given(fredholm1(), fredholm1())
def test_oracle_additive(a, b):
    assert oracle_index(a * b) == oracle_index(a) + oracle_index(b)


@settings(max_examples=25)
@given(fredholm1(), f_element())
def test_oracle_finite_rank_invariance(a, f):
    assert oracle_index(a + f) == oracle_index(a)


@settings(max_examples=20)
@given(f2_element())
def test_one_plus_F2_index_zero(f):
    assert oracle_index(1 + f) == 0
