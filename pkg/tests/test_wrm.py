import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wrmatrix.errors import BoundaryMismatchError
from wrmatrix.sequences import BoundaryPair
from wrmatrix.wrm import (
    Matrix,
    RecurrenceParams,
    WrmDescriptor,
    build_wrm,
    det_bareiss,
    det_cofactor,
    mat_eq,
    mat_mul,
    mat_transpose,
    pascal_like,
    toeplitz,
    weighted_toeplitz,
)
from oracles import as_lists, leibniz_det, matmul, pascal, recurrence_fill
from strategies import descriptors, rationals


def M(rows):
    return Matrix(rows)


def test_build_wrm_examples():
    assert build_wrm(WrmDescriptor.of((1, 0, 1), (1, 1, 1), (1, 1, 1))) == M([[1, 1, 1], [1, 2, 3], [1, 3, 6]])
    assert build_wrm(WrmDescriptor.of((1, 1, 1), (1, 1, 1), (1, 1, 1))) == M([[1, 1, 1], [1, 3, 5], [1, 5, 13]])
    assert build_wrm(WrmDescriptor.of((1, 1, 1), (1, 2, 4), (1, 0, 0))) == M([[1, 0, 0], [2, 3, 3], [4, 9, 15]])


def test_build_wrm_boundary_mismatch():
    with pytest.raises(BoundaryMismatchError):
        WrmDescriptor.of((1, 0, 1), (1, 2), (2, 1))


def test_pascal_like_examples():
    assert pascal_like(1, 1, 3) == M([[1, 0, 0], [1, 1, 0], [1, 2, 1]])
    assert pascal_like(1, 0, 4) == Matrix.identity(4)
    assert pascal_like(2, 3, 3) == M([[1, 0, 0], [3, 2, 0], [9, 12, 4]])


def test_toeplitz_examples():
    assert toeplitz(BoundaryPair((1, 2, 3), (1, 5, 7))) == M([[1, 5, 7], [2, 1, 5], [3, 2, 1]])
    assert toeplitz(BoundaryPair((1, 0, 0), (1, 0, 0))) == Matrix.identity(3)
    assert toeplitz(BoundaryPair((1, 1, 1), (1, 1, 1))) == Matrix.ones(3)


def test_weighted_toeplitz_examples():
    pair = BoundaryPair((1, 2, 3), (1, 4, 5))
    assert weighted_toeplitz(pair, 2) == M([[1, 4, 5], [2, 2, 8], [3, 4, 4]])
    assert weighted_toeplitz(pair, 1) == toeplitz(pair)
    assert weighted_toeplitz(BoundaryPair((3, 0, 0), (3, 0, 0)), 2) == M([[3, 0, 0], [0, 6, 0], [0, 0, 12]])


def test_matrix_algebra_examples():
    A = M([[1, Fraction(1, 2)], [3, -4]])
    assert mat_mul(Matrix.identity(2), A) == A
    assert mat_transpose(mat_transpose(A)) == A
    L = pascal_like(1, 1, 3)
    assert mat_mul(L, mat_transpose(L)) == M([[1, 1, 1], [1, 2, 3], [1, 3, 6]])
    assert mat_eq(A, A) and not mat_eq(A, A.replace(0, 0, 2))
    with pytest.raises(ValueError):
        mat_mul(A, Matrix.identity(3))


def test_matrix_validation_and_immutability():
    with pytest.raises(ValueError):
        Matrix([[1, 2]])
    with pytest.raises(ValueError):
        Matrix([])
    A = M([[1, 2], [3, 4]])
    B = A.replace(0, 0, 9)
    assert A[0, 0] == 1 and B[0, 0] == 9
    with pytest.raises(AttributeError):
        A.foo = 1


def test_det_examples():
    assert det_bareiss(Matrix.identity(5)) == 1
    assert det_bareiss(M([[1, 1], [1, 1]])) == 0
    assert det_bareiss(M([[1, 1, 1], [1, 3, 5], [1, 5, 13]])) == 8
    assert det_bareiss(M([[0, 1], [1, 0]])) == -1
    assert det_bareiss(M([[Fraction(1, 2)]])) == Fraction(1, 2)


def test_serialization():
    A = M([[1, Fraction(-3, 7)], [0, 2]])
    assert json.loads(A.to_json()) == [["1", "-3/7"], ["0", "2"]]
    assert Matrix.from_json_obj(A.to_json_obj()) == A
    assert A.to_csv() == "1,-3/7\n0,2\n"
    assert A.to_latex() == "\\begin{pmatrix}\n1 & -\\frac{3}{7} \\\\\n0 & 2 \\\\\n\\end{pmatrix}"


@given(descriptors(max_n=8))
def test_recurrence_invariant(d):
    P = build_wrm(d)
    x, y, z = d.params
    assert as_lists(P) == recurrence_fill(x, y, z, d.alpha, d.beta)
    for i in range(1, d.n):
        for j in range(1, d.n):
            assert P[i, j] == x * P[i, j - 1] + y * P[i - 1, j - 1] + z * P[i - 1, j]


@given(rationals(), rationals(), st.integers(1, 12))
def test_pascal_like_closed_form(v, w, n):
    lam = tuple(w**i for i in range(n))
    mu = (1,) + (0,) * (n - 1)
    P = pascal_like(v, w, n)
    assert P == build_wrm(WrmDescriptor.of((0, v, w), lam, mu))
    assert as_lists(P) == pascal(v, w, n)
    assert P.is_lower_triangular()
    assert all(P[i, i] == v**i for i in range(n))


@given(descriptors(max_n=8))
def test_toeplitz_equivalences(d):
    x = d.params.x
    assert toeplitz(d.boundary) == build_wrm(WrmDescriptor(RecurrenceParams.of(0, 1, 0), d.boundary))
    assert weighted_toeplitz(d.boundary, x) == build_wrm(WrmDescriptor(RecurrenceParams.of(0, x, 0), d.boundary))
    assert toeplitz(d.boundary).is_toeplitz()


@given(descriptors(max_n=8))
def test_symmetry(d):
    x, y, _ = d.params
    sym = WrmDescriptor(RecurrenceParams(x, y, x), BoundaryPair(d.alpha, d.alpha))
    assert build_wrm(sym).is_symmetric()


@given(descriptors(max_n=6), descriptors(max_n=6))
def test_transpose_of_product(d1, d2):
    n = min(d1.n, d2.n)
    A = Matrix([r[:n] for r in build_wrm(d1).rows[:n]])
    B = Matrix([r[:n] for r in build_wrm(d2).rows[:n]])
    assert (A @ B).T == B.T @ A.T
    assert as_lists(A @ B) == matmul(as_lists(A), as_lists(B))


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(rationals(), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(rows):
    A = Matrix(rows)
    assert det_bareiss(A) == det_cofactor(A)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(rationals(), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_cofactor_matches_leibniz(rows):
    assert det_cofactor(Matrix(rows)) == leibniz_det(rows)


@given(rationals(), rationals(), st.integers(1, 10))
def test_det_pascal_like_independent_of_w(v, w, n):
    assert det_bareiss(pascal_like(v, w, n)) == v ** (n * (n - 1) // 2)


def test_large_order():
    d = WrmDescriptor.of((1, Fraction(1, 3), 2), [Fraction(i, 5) + 1 for i in range(64)], [1] * 64)
    P = build_wrm(d)
    assert P.n == 64
    assert det_bareiss(pascal_like(3, 2, 64)) == 3 ** (64 * 63 // 2)
