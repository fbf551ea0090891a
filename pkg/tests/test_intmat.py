import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from ivhs.intmat import (hermite_normal_form, integer_kernel, invariant_factors,
                         smith_normal_form, solve_integer)


@st.composite
def int_matrices(draw):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 5))
    return [[draw(st.integers(-9, 9)) for _ in range(c)] for _ in range(r)]


def _mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _det(m):
    return sympy.Matrix(m).det()


@given(int_matrices())
def test_smith_transforms(a):
    u, s, v = smith_normal_form(a)
    assert _mul(_mul(u, a), v) == s
    assert abs(_det(u)) == 1 and abs(_det(v)) == 1
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    assert all(s[i][j] == 0 for i in range(len(s)) for j in range(len(s[0])) if i != j)
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(int_matrices())
def test_invariant_factors_match_sympy(a):
    m = sympy.Matrix(a)
    s = sympy_snf(m, domain=sympy.ZZ)
    oracle = sorted(abs(int(s[i, i])) for i in range(min(s.shape)) if s[i, i] != 0)
    assert sorted(invariant_factors(a)) == oracle


def test_known_smith_form():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


@given(int_matrices())
def test_hermite_spans_same_lattice(a):
    h = hermite_normal_form(a)
    assert sympy.Matrix(h).rank() == sympy.Matrix(a).rank() == len(h)
    # each original row is an integer combination of h (solvable over Z)
    for row in a:
        assert solve_integer([list(c) for c in zip(*h)], row) is not None if h else not any(row)


@given(int_matrices())
def test_integer_kernel(a):
    ker = integer_kernel(a, len(a[0]))
    for v in ker:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)
    assert len(ker) == len(a[0]) - sympy.Matrix(a).rank()


@given(int_matrices(), st.lists(st.integers(-5, 5), min_size=5, max_size=5))
def test_solve_integer_finds_solution(a, x):
    x = x[: len(a[0])]
    b = [sum(p * q for p, q in zip(row, x)) for row in a]
    y = solve_integer(a, b)
    assert y is not None
    assert [sum(p * q for p, q in zip(row, y)) for row in a] == b


def test_solve_integer_detects_no_solution():
    assert solve_integer([[2, 4]], [3]) is None
