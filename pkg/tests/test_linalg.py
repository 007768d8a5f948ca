from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigraph.linalg import (DimensionMismatchError, Echelon, SparseMatrix, kernel_basis, mat_inverse, mat_mul,
                             rank, rank_of_vectors, rref, span_dimension)


def test_rank_examples():
    assert rank(SparseMatrix.identity(3)) == 3
    assert rank(SparseMatrix(3, 3)) == 0
    assert rank(SparseMatrix.from_rows([[1, 2, 3], [2, 4, 6]])) == 1


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.identity(3)) == []
    assert kernel_basis(SparseMatrix.from_rows([[1, -1]])) == [{0: 1, 1: 1}]
    assert kernel_basis(SparseMatrix(2, 2)) == [{0: 1}, {1: 1}]


def test_span_dimension_examples():
    assert span_dimension([(1, 0), (0, 1), (1, 1)]) == 2
    assert span_dimension([]) == 0
    assert span_dimension([(2, 4), (1, 2)]) == 1
    with pytest.raises(DimensionMismatchError):
        span_dimension([(1, 0), (1, 0, 0)])


def test_matrix_validation():
    with pytest.raises(IndexError):
        SparseMatrix(2, 2, {(2, 0): 1})
    with pytest.raises(DimensionMismatchError):
        SparseMatrix.from_rows([[1, 2], [1]])
    m = SparseMatrix(2, 2, {(0, 0): 0, (1, 1): Fraction(1, 2)})
    assert m.entries() == {(1, 1): Fraction(1, 2)}


def test_rref_is_reduced():
    rows, piv = rref(SparseMatrix.from_rows([[0, 2, 4], [1, 1, 1], [1, 3, 5]]))
    assert piv == [0, 1]
    assert rows == [{0: 1, 2: -1}, {1: 1, 2: 2}]


def test_echelon_add_reports_independence():
    e = Echelon()
    assert e.add({0: 1, 1: 1})
    assert not e.add({0: 2, 1: 2})
    assert e.contains({0: -3, 1: -3})
    assert e.rank == 1


def test_rank_of_vectors_with_tuple_keys():
    assert rank_of_vectors([{("a", 1): 1}, {("b", 2): 1}, {("a", 1): 2, ("b", 2): 2}]) == 2


def test_inverse_roundtrip():
    a = [[2, 1, 0], [1, 1, 0], [0, 3, 1]]
    inv = mat_inverse(a)
    assert mat_mul(a, inv) == [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    with pytest.raises(ZeroDivisionError):
        mat_inverse([[1, 2], [2, 4]])


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_equals_transpose_rank(rows):
    m = SparseMatrix.from_rows(rows)
    assert rank(m) == rank(m.transpose())


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(rows):
    m = SparseMatrix.from_rows(rows)
    ker = kernel_basis(m)
    assert m.cols == rank(m) + len(ker)
    for v in ker:
        for row in m.row_dicts():
            assert sum(c * v.get(j, 0) for j, c in row.items()) == 0


@given(matrices, st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_rank_independent_of_row_order(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rank(SparseMatrix.from_rows(rows)) == rank(SparseMatrix.from_rows(shuffled))


def test_random_sparse_rank_symmetry():
    rng = random.Random(5)
    for _ in range(20):
        entries = {(rng.randrange(15), rng.randrange(40)): rng.randint(-5, 5) for _ in range(60)}
        m = SparseMatrix(15, 40, entries)
        assert rank(m) == rank(m.transpose())
