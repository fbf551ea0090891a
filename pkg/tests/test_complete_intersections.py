from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ivhs.complete_intersections import (BigradedDegree, CIProblem, bigraded_piece_dim, check_ci,
                                         ci_hodge, ci_moduli, effective_bound,
                                         integer_root_ceiling)
from ivhs.errors import DimensionTooSmall, InputError, ModuliIdentificationUnavailable
from ivhs.hodge import hypersurface_hodge
from ivhs.jacobian import fermat_section, ring_piece_dim
from ivhs.nongenericity import check_toric
from ivhs.toric import projective_space_fan

P4 = projective_space_fan(4)


@pytest.mark.parametrize("d", [5, 6])
def test_single_hypersurface_collapses_to_jacobian_ring(d):
    prob = CIProblem(4, [d])
    fermat = fermat_section(P4, d)
    hodge = [ci_hodge(prob, p) for p in range(4)]
    # the (p, d - 5) piece is R_{(p + 1) d - 5} of the one-variable-eliminated ring
    assert hodge == [ring_piece_dim(P4, fermat, (p + 1) * d - 5) for p in range(4)]
    assert tuple(hodge[:2]) == hypersurface_hodge(P4, [1, 0, 0, 0, 0], d)
    assert hodge == hodge[::-1]


def test_classical_values():
    assert [ci_hodge(CIProblem(4, [5]), p) for p in range(4)] == [1, 101, 101, 1]
    assert [ci_hodge(CIProblem(4, [6]), p) for p in range(4)] == [5, 255, 255, 5]
    assert ci_moduli(CIProblem(4, [5])) == 101


def test_cubic_quartic_in_p5():
    prob = CIProblem(5, [3, 4])
    assert prob.degrees == (4, 3) and prob.dX == 1 and prob.dim == 3
    hodge = [ci_hodge(prob, p) for p in range(4)]
    assert hodge == [6, 224, 224, 6]
    # h_top is the number of degree-1 forms: sections of K_X = O(1)
    assert hodge[0] == comb(6, 1)


def test_ambient_bigraded_dimensions():
    prob = CIProblem(5, [3, 4])
    # (1, 0): mu_1 x^4 or mu_2 x^3
    assert bigraded_piece_dim(prob, (1, 0), "ambient") == comb(9, 5) + comb(8, 5)
    assert bigraded_piece_dim(prob, (0, 2), "ambient") == comb(7, 5)
    assert bigraded_piece_dim(prob, (0, -1), "ambient") == 0


def test_hypotheses():
    with pytest.raises(ModuliIdentificationUnavailable):
        check_ci(CIProblem(6, [2, 2, 2]))
    with pytest.raises(ModuliIdentificationUnavailable):
        ci_moduli(CIProblem(6, [2, 2, 2]))
    with pytest.raises(DimensionTooSmall):
        check_ci(CIProblem(4, [3, 3]))
    with pytest.raises(InputError):
        CIProblem(3, [2, 2, 2])
    with pytest.raises(InputError):
        CIProblem(4, [0])
    with pytest.raises(InputError):
        ci_hodge(CIProblem(4, [5]), 4)


def test_hypersurface_certificate_matches_toric_path():
    ci = check_ci(CIProblem(4, [5]))
    toric = check_toric(P4, [1, 0, 0, 0, 0], 5)
    ignore = ("instance", "section", "warnings", "p0_method")
    assert ci.comparable(ignore) == toric.comparable(ignore)
    assert ci.instance["dX"] == 0


def test_cubic_quartic_certificate():
    c = check_ci(CIProblem(5, [3, 4]))
    assert (c.h_top, c.h_next, c.mu, c.rhs) == (6, 224, 139, 114)
    assert c.p0_injective and c.p1_nonzero and c.verdict == "NonGeneric"
    assert c.section == "diagonal"
    assert any("smoothness" in w for w in c.warnings)


def test_explicit_forms_are_used():
    nx = 5
    fermat = {tuple(5 * int(i == j) for j in range(nx)): 1 for i in range(nx)}
    prob = CIProblem(4, [5], forms=[fermat])
    assert ci_hodge(prob, 1) == 101
    c = check_ci(prob)
    assert c.section == "explicit" and c.mu == 101
    with pytest.raises(InputError):
        CIProblem(4, [5], forms=[{(1, 0, 0, 0, 0): 1}]).quotient()


def test_bigraded_degree_arithmetic():
    a, b = BigradedDegree(1, 0), BigradedDegree(0, 3)
    assert a + b == (1, 3) and (a + b).p == 1 and (a + b - a).q == 3


def test_effective_bound():
    assert effective_bound(4, 1) == 7
    with pytest.raises(InputError):
        effective_bound(4, 4)
    assert effective_bound(5, 2) >= 5


@given(st.integers(0, 10 ** 30), st.integers(1, 6))
def test_integer_root_ceiling(x, r):
    k = integer_root_ceiling(x, r)
    assert k ** r >= x
    assert k == 0 or (k - 1) ** r < x
