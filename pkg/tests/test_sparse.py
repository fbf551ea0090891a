from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from ivhs.linalg import rank
from ivhs.sparse import SparseEchelon


@st.composite
def sparse_rows(draw):
    n = draw(st.integers(1, 8))
    rows = draw(st.lists(st.dictionaries(st.integers(0, n - 1), st.integers(-4, 4), max_size=n),
                         max_size=9))
    return n, rows


def _dense(n, v):
    return [Fraction(v.get(i, 0)) for i in range(n)]


@given(sparse_rows())
def test_rank_matches_dense(data):
    n, rows = data
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    dense = [_dense(n, r) for r in rows]
    assert ech.rank == (rank(dense) if dense else 0)


@given(sparse_rows())
def test_residual_is_in_standard_coordinates(data):
    n, rows = data
    ech = SparseEchelon()
    for r in rows[:-1]:
        ech.add(r)
    if rows:
        residual = ech.normal_form(rows[-1])
        assert not any(ech.is_pivot(k) for k in residual)


@given(sparse_rows())
def test_tracked_relations_are_kernel_vectors(data):
    n, rows = data
    ech = SparseEchelon(track=True)
    for i, r in enumerate(rows):
        ech.add(r, {i: 1})
    assert len(ech.relations) == len(rows) - ech.rank
    for rel in ech.relations:
        combo = [sum(c * Fraction(rows[i].get(k, 0)) for i, c in rel.items()) for k in range(n)]
        assert all(x == 0 for x in combo)


def test_contains_span_members():
    ech = SparseEchelon()
    ech.add({0: 1, 2: 1})
    ech.add({1: 2, 2: -1})
    assert ech.contains({0: 2, 1: 2, 2: 1})
    assert not ech.contains({2: 1})
