from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ivhs.linalg import (InconsistentSystem, RationalMatrix, RationalPolynomial,
                         interpolate_polynomial, kernel_basis, rank, solve)

entries = st.integers(min_value=-6, max_value=6)


@st.composite
def int_matrices(draw, max_rows=6, max_cols=6):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


def _apply(m, v):
    return [sum(Fraction(a) * x for a, x in zip(row, v)) for row in m]


def test_rank_small_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank(RationalMatrix.identity(5)) == 5
    assert rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_kernel_of_rank_one_matrix():
    basis = kernel_basis([[1, 2, 3]])
    assert len(basis) == 2
    for v in basis:
        assert _apply([[1, 2, 3]], v) == [0]


def test_solve_and_inconsistent():
    x = solve([[1, 1], [1, -1]], [3, 1])
    assert x == [2, 1]
    with pytest.raises(InconsistentSystem):
        solve([[1, 1], [2, 2]], [1, 3])


@given(int_matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sympy.Matrix(m).rank()


@given(int_matrices(), st.sampled_from(["min", "first"]))
def test_kernel_is_kernel_of_right_size(m, pivoting):
    basis = kernel_basis(m, pivoting)
    cols = len(m[0])
    assert len(basis) == cols - rank(m)
    for v in basis:
        assert all(x == 0 for x in _apply(m, v))
    if basis:
        assert rank(basis) == len(basis)


@given(int_matrices())
def test_pivoting_strategies_agree(m):
    assert rank(m, "min") == rank(m, "first")


@given(int_matrices(), st.lists(entries, min_size=6, max_size=6))
def test_solve_recovers_a_solution(m, x):
    x = x[: len(m[0])]
    b = _apply(m, x)
    y = solve(m, b)
    assert _apply(m, y) == b


def test_matrix_product_and_transpose():
    a = RationalMatrix([[1, 2], [3, 4]])
    b = RationalMatrix([[0, 1], [1, 0]])
    assert (a @ b).tolist() == [[2, 1], [4, 3]]
    assert a.T.tolist() == [[1, 3], [2, 4]]
    assert a.integer_rows() == [[1, 2], [3, 4]]


def test_interpolation_recovers_polynomial():
    p = RationalPolynomial([1, Fraction(25, 12), Fraction(35, 24), Fraction(5, 12), Fraction(1, 24)])
    pts = [(t, p(t)) for t in range(5)]
    assert interpolate_polynomial(pts) == p


def test_interpolation_rejects_repeated_nodes():
    with pytest.raises(ValueError):
        interpolate_polynomial([(1, 2), (1, 3)])


@given(st.lists(st.fractions(min_value=-49, max_value=49, max_denominator=7), min_size=1,
                max_size=6))
def test_interpolation_round_trip(coeffs):
    p = RationalPolynomial(coeffs)
    nodes = range(-2, len(coeffs) - 2)
    assert interpolate_polynomial([(t, p(t)) for t in nodes]) == p


@given(st.lists(entries, min_size=1, max_size=4), st.lists(entries, min_size=1, max_size=4),
       st.integers(-5, 5))
def test_polynomial_ring_operations(a, b, t):
    p, q = RationalPolynomial(a), RationalPolynomial(b)
    assert (p * q)(t) == p(t) * q(t)
    assert (p + q)(t) == p(t) + q(t)
