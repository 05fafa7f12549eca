import pytest
from hypothesis import given
from hypothesis import strategies as st

from glcohom.parabolic import (
    Composition,
    compositions,
    dual,
    gl_order,
    parabolic_label,
    parabolic_order,
    symmetric_compositions,
)

C = Composition


def test_compositions_counts():
    assert compositions(1) == [C((1,))]
    assert len(compositions(4)) == 8
    assert len(compositions(6)) == 32
    for r in range(1, 9):
        comps = compositions(r)
        assert len(set(comps)) == 2 ** (r - 1)
        assert all(c.r == r for c in comps)
    with pytest.raises(ValueError):
        compositions(0)


def test_composition_order_is_fixed():
    assert compositions(3) == [C((3,)), C((1, 2)), C((2, 1)), C((1, 1, 1))]


def test_dual():
    assert dual(C((1, 2, 1))) == C((1, 2, 1))
    assert dual(C((1, 1, 2))) == C((2, 1, 1))
    assert dual(C((3, 3))) == C((3, 3))


def test_symmetric_compositions():
    six = {C(p) for p in [(1, 1, 1, 1, 1, 1), (1, 1, 2, 1, 1), (1, 2, 2, 1), (1, 4, 1),
                          (2, 1, 1, 2), (2, 2, 2), (3, 3), (6,)]}
    assert set(symmetric_compositions(6)) == six
    assert set(symmetric_compositions(4, proper_only=True)) == {C((1, 1, 1, 1)), C((1, 2, 1)), C((2, 2))}
    assert symmetric_compositions(2, proper_only=True) == [C((1, 1))]
    assert [len(symmetric_compositions(r)) for r in range(1, 7)] == [1, 2, 2, 4, 4, 8]


@pytest.mark.parametrize("r", range(1, 9))
def test_nonsymmetric_pair_off(r):
    rest = [c for c in compositions(r) if not c.symmetric]
    assert all(dual(c) != c and dual(c) in rest for c in rest)
    assert len(rest) % 2 == 0


def test_gl_order():
    assert gl_order(6, 2) == 20_158_709_760
    assert gl_order(4, 2) == 20_160
    assert gl_order(0, 2) == gl_order(1, 2) == 1
    assert gl_order(3, 2) == 168


def test_parabolic_order_examples():
    assert parabolic_order(C((2, 2)), 2) == 576
    assert parabolic_order(C((1, 4, 1)), 2) == 10_321_920
    assert parabolic_order(C((3, 3)), 2) == 14_450_688


compositions_st = st.lists(st.integers(1, 4), min_size=1, max_size=5).map(C)


@given(compositions_st, st.sampled_from([2, 3, 4]))
def test_order_dual_invariant(lam, q):
    assert parabolic_order(lam, q) == parabolic_order(dual(lam), q)
    assert dual(dual(lam)) == lam


@given(st.integers(1, 7), st.sampled_from([2, 3, 4]))
def test_order_extremes(r, q):
    assert parabolic_order(C((r,)), q) == gl_order(r, q)
    # the diagonal torus contributes (q-1)^r, trivial over F_2
    assert parabolic_order(C((1,) * r), q) == q ** (r * (r - 1) // 2) * (q - 1) ** r
    assert parabolic_order(C((1,) * r), 2) == 2 ** (r * (r - 1) // 2)


@given(compositions_st, st.sampled_from([2, 3, 4]))
def test_order_divides_gl(lam, q):
    assert gl_order(lam.r, q) % parabolic_order(lam, q) == 0


def test_label():
    assert parabolic_label(C((1, 4, 1))) == "GL(q=2,r=6):P(1+4+1)"
    assert str(C((1, 2))) == "(1,2)"
    with pytest.raises(ValueError):
        C(())
    with pytest.raises(ValueError):
        C((0, 2))
