import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from glcohom.f2la import BitMatrix, SpanBuilder, in_span, kernel_basis, rank, rref
from reference import naive_rank, naive_rref


def bm(rows):
    return BitMatrix.from_dense(np.array(rows, dtype=np.uint8))


def test_rref_identity():
    ef = rref(BitMatrix.identity(2))
    assert ef.matrix == BitMatrix.identity(2)
    assert ef.pivot_cols == (0, 1)


def test_rref_rank_one():
    ef = rref(bm([[1, 1], [1, 1]]))
    assert ef.matrix == bm([[1, 1], [0, 0]])
    assert ef.pivot_cols == (0,)


def test_rref_does_not_mutate():
    m = bm([[0, 1, 1], [1, 1, 0]])
    before = m.to_dense().copy()
    rref(m)
    assert np.array_equal(m.to_dense(), before)


def test_rank_basic():
    assert rank(BitMatrix.zeros(5, 7)) == 0
    assert rank(BitMatrix.identity(9)) == 9
    assert rank(bm([[1, 1], [1, 1]])) == 1


def test_empty_shapes():
    for shape in [(0, 5), (5, 0), (0, 0)]:
        m = BitMatrix.zeros(*shape)
        assert rank(m) == 0
        assert kernel_basis(m).shape == (shape[1] if shape[0] == 0 else 0, shape[1])


def test_padding_bits_zeroed():
    m = BitMatrix(2, 3, np.array([[0xFF], [0xFFFF]], dtype=np.uint64))
    assert int(m.data[0, 0]) == 0b111
    assert m.to_dense().tolist() == [[1, 1, 1], [1, 1, 1]]


def test_kernel_examples():
    assert kernel_basis(BitMatrix.identity(4)).shape == (0, 4)
    k = kernel_basis(bm([[1, 1]]))
    assert k.to_dense().tolist() == [[1, 1]]


def test_in_span():
    ef = rref(bm([[0, 1]]))
    assert in_span([0, 0], ef)
    assert in_span([0, 1], ef)
    assert not in_span([1, 0], ef)
    with pytest.raises(ValueError):
        in_span([1, 0, 0], ef)


def test_transpose_roundtrip(rng):
    m = BitMatrix.random(70, 130, rng)
    assert m.transpose().transpose() == m
    assert np.array_equal(m.transpose().to_dense(), m.to_dense().T)


def test_kernel_across_word_boundary(rng):
    m = BitMatrix.random(40, 200, rng)
    k = kernel_basis(m)
    assert k.rows == 200 - rank(m)
    prod = (m.to_dense().astype(int) @ k.to_dense().T.astype(int)) % 2
    assert not prod.any()


def test_span_builder_matches_rref(rng):
    m = BitMatrix.random(30, 90, rng, density=0.2)
    sb = SpanBuilder(90)
    sb.add_many(m.data)
    assert sb.dim == rank(m)
    assert sb.echelon().matrix == rref(m).basis()


def test_deterministic(rng):
    m = BitMatrix.random(50, 80, rng)
    assert rref(m) == rref(BitMatrix.from_dense(m.to_dense()))
    assert kernel_basis(m) == kernel_basis(m)


matrices = st.tuples(st.integers(0, 40), st.integers(0, 150)).flatmap(
    lambda s: hnp.arrays(np.uint8, s, elements=st.integers(0, 1))
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_against_reference(a):
    m = BitMatrix.from_dense(a)
    ef = rref(m)
    ref, piv = naive_rref(a)
    assert list(ef.pivot_cols) == piv
    assert np.array_equal(ef.matrix.to_dense(), ref)
    assert rref(ef.matrix) == ef
    assert rank(m) == rank(m.transpose()) == naive_rank(a)
    k = kernel_basis(m)
    assert k.rows == a.shape[1] - len(piv)
    assert rank(k) == k.rows
    if k.rows:
        assert not ((a.astype(int) @ k.to_dense().T.astype(int)) % 2).any()


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_in_span_against_rank(a, data):
    m = BitMatrix.from_dense(a)
    v = data.draw(hnp.arrays(np.uint8, (a.shape[1],), elements=st.integers(0, 1)))
    expected = naive_rank(np.vstack([a, v[None, :]])) == naive_rank(a)
    assert in_span(v, rref(m)) == expected
