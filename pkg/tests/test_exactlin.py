from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcat.exactlin import NoSolution, SparseMatrix, Subspace, as_scalar, nullspace, rank, rref, solve

F = Fraction


def dense(m):
    return [[F(v) for v in row] for row in m.to_dense()]


def sympy_rref(m):
    M = sympy.Matrix(m.rows, m.cols, lambda r, c: sympy.Rational(m.to_dense()[r][c]))
    R, piv = M.rref()
    return [[F(int(R[r, c].p), int(R[r, c].q)) for c in range(m.cols)] for r in range(m.rows)], list(piv)


small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(1, max_cols))
    data = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return SparseMatrix.from_dense(data, cols=c)


def test_rref_identity():
    m = SparseMatrix.from_dense([[1, 0], [0, 1]])
    r, red, piv = rref(m)
    assert (r, red, piv) == (2, m, [0, 1])


def test_rref_zero():
    m = SparseMatrix(3, 3)
    assert rref(m) == (0, m, [])


def test_rref_rank_one():
    r, red, piv = rref(SparseMatrix.from_dense([[1, 2], [2, 4]]))
    assert r == 1 and piv == [0]
    assert dense(red) == [[1, 2], [0, 0]]


def test_nullspace_examples():
    assert nullspace(SparseMatrix.from_dense([[1, 0], [0, 1]])) == []
    assert nullspace(SparseMatrix(1, 3)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert nullspace(SparseMatrix.from_dense([[1, 1, 0]])) == [[-1, 1, 0], [0, 0, 1]]


def test_solve_examples():
    assert solve(SparseMatrix.from_dense([[1, 0], [0, 1]]), [3, 5]) == [3, 5]
    assert solve(SparseMatrix.from_dense([[1, 1]]), [2]) == [2, 0]
    with pytest.raises(NoSolution):
        solve(SparseMatrix.from_dense([[1], [1]]), [1, 2])
    with pytest.raises(ValueError):
        solve(SparseMatrix.from_dense([[1, 1]]), [1, 2])


def test_entries_canonical_and_no_floats():
    m = SparseMatrix(2, 2, ((1, 0, 3), (0, 1, 0), (0, 0, F(1, 2))))
    assert m.entries == ((0, 0, F(1, 2)), (1, 0, F(3)))
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(ValueError):
        SparseMatrix(1, 1, ((0, 0, 1), (0, 0, 2)))
    with pytest.raises(IndexError):
        SparseMatrix(1, 1, ((1, 0, 1),))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rref_matches_sympy(m):
    r, red, piv = rref(m)
    expect, epiv = sympy_rref(m)
    assert dense(red) == expect
    assert piv == epiv and r == len(epiv)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_nullity_and_annihilation(m):
    ns = nullspace(m)
    assert rank(m) + len(ns) == m.cols
    for v in ns:
        assert all(x == 0 for x in m.matvec(v))
    assert rref(rref(m)[1])[1] == rref(m)[1]


@settings(max_examples=80, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent(m, data):
    x0 = data.draw(st.lists(small, min_size=m.cols, max_size=m.cols))
    rhs = m.matvec(x0)
    x = solve(m, rhs)
    assert m.matvec(x) == rhs


@settings(max_examples=60, deadline=None)
@given(st.lists(st.dictionaries(st.sampled_from("abcd"), small, max_size=4), max_size=5))
def test_subspace_reduce_and_coordinates(vectors):
    S = Subspace("abcd", vectors)
    M = sympy.Matrix([[v.get(k, 0) for k in "abcd"] for v in vectors]) if vectors else sympy.zeros(0, 4)
    assert S.dim == M.rank()
    for v in vectors:
        assert S.contains(v)
        assert S.reduce(v) == {}
        coords = S.coordinates(v)
        rebuilt = {}
        for c, row in zip(coords, S.basis()):
            for k, x in row.items():
                rebuilt[k] = rebuilt.get(k, 0) + c * x
        assert {k: x for k, x in rebuilt.items() if x} == {k: F(x) for k, x in v.items() if x}
