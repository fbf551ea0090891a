from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivhs.errors import CriterionInapplicable, DimensionTooSmall, NotAmple, NotCartier
from ivhs.hodge import (HodgeSummary, hodge_summary, hypersurface_hodge, inequality_rhs,
                        interior_points, moduli_dim)
from ivhs.jacobian import cox_ring, jacobian_ring, random_section
from ivhs.polytope import LatticePolytope
from ivhs.toric import beta0, divisor_polytope, projective_space_fan, wps_fan

P4 = projective_space_fan(4)
H = [1, 0, 0, 0, 0]


def p4_hodge_oracle(t):
    """Binomial closed forms for the hyperplane simplex: l*(k Delta) = C(k - 1, 4)."""
    h_top = comb(t - 1, 4)
    h_next = comb(2 * t - 1, 4) - 5 * h_top - 5 * comb(t - 1, 3)
    return h_top, h_next


@given(st.integers(1, 8))
def test_p4_hodge_matches_binomial_oracle(t):
    assert hypersurface_hodge(P4, H, t) == p4_hodge_oracle(t)


def test_classical_threefolds():
    assert hypersurface_hodge(P4, H, 5) == (1, 101)
    assert hypersurface_hodge(P4, H, 6) == (5, 255)
    assert hypersurface_hodge(wps_fan([1, 1, 1, 1, 2]), [2, 0, 0, 0, 0], 3) == (1, 103)


def test_moduli_counts():
    # generic J_t is spanned by the 25 products x_i * df/dx_j
    assert moduli_dim(P4, H, 5) == 101 == comb(9, 4) - 25
    assert moduli_dim(P4, H, 6) == 185 == comb(10, 4) - 25


@pytest.mark.parametrize("fan, divisor, t", [
    (P4, H, 5),
    (P4, H, 6),
    (wps_fan([1, 1, 1, 1, 2]), [2, 0, 0, 0, 0], 4),
])
def test_h_top_is_jacobian_piece(fan, divisor, t):
    ring = cox_ring(fan)
    beta = ring.degree(divisor) * t
    f = random_section(fan, beta, seed=0)
    assert hypersurface_hodge(fan, divisor, t)[0] == jacobian_ring(f).dim(beta - beta0(fan))


def test_inequality_rhs():
    assert inequality_rhs(1, 101) == 303
    assert inequality_rhs(5, 255) == 153
    assert inequality_rhs(1, 1) == 3
    with pytest.raises(CriterionInapplicable):
        inequality_rhs(0, 5)


def test_summary_and_hypotheses():
    s = hodge_summary(P4, H, 6)
    assert (s.h_top, s.h_next, s.mu) == (5, 255, 185)
    assert s.vanishing_equals_full
    with pytest.raises(DimensionTooSmall):
        hodge_summary(projective_space_fan(3), [1, 0, 0, 0], 4)
    with pytest.raises(DimensionTooSmall):
        moduli_dim(projective_space_fan(3), [1, 0, 0, 0], 4)
    with pytest.raises(NotCartier):
        hypersurface_hodge(wps_fan([1, 1, 1, 1, 2]), [1, 0, 0, 0, 0], 1)
    with pytest.raises(NotAmple):
        hypersurface_hodge(P4, [0, 0, 0, 0, 0], 1)
    with pytest.raises(ValueError):
        HodgeSummary(4, 1, -1, 0, 0)


def test_interior_points_cross_check():
    assert interior_points(LatticePolytope.simplex(4), 5) == 1
    assert interior_points(LatticePolytope.box([2, 2]), 1) == 1


def _asymptotic_ratio(n, t):
    delta = divisor_polytope(projective_space_fan(n), [1] + [0] * n)
    return interior_points(delta, t) / (delta.normalized_volume() * t ** n)


@pytest.mark.parametrize("n", [2, 3])
def test_asymptotic_ratio_at_t10(n):
    # stated tolerance: within 20% of the leading term at t = 10
    assert abs(_asymptotic_ratio(n, 10) - 1) <= 0.2


@pytest.mark.parametrize("n", [2, 3])
def test_asymptotic_ratio_at_t30(n):
    assert abs(_asymptotic_ratio(n, 30) - 1) <= 0.2
    assert abs(_asymptotic_ratio(n, 30) - 1) < abs(_asymptotic_ratio(n, 10) - 1)
