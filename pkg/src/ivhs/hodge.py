"""Hodge numbers and moduli counts of ample toric hypersurfaces.

For an ample Cartier divisor ``D`` with polytope ``Delta`` and ``Delta_t = t Delta``:

    h_top  = l*(Delta_t)
    h_next = l*(2 Delta_t) - (n + 1) l*(Delta_t) - sum over facets G of l*(G)

where ``l*`` counts relative-interior lattice points.  Every ``l*`` of a
full polytope is computed twice, by reciprocity from the Ehrhart
polynomial and by strict enumeration, and the two must agree.

The moduli count ``mu_t`` is ``dim R(f)_{[tD]}`` for generic ``f``; generic
means the minimum over several random sections (ring dimensions can only go
up on special sections).
"""
from .errors import (ComputationTooLarge, CriterionInapplicable, DimensionTooSmall, InputError,
                     IVHSError, NotAmple, NotCartier)
from .jacobian import cox_ring, jacobian_ring, random_section
from .toric import TorusDivisor, divisor_polytope, is_ample_toric, is_cartier

__all__ = [
    "HodgeSummary",
    "hypersurface_hodge",
    "moduli_dim",
    "moduli_samples",
    "hodge_summary",
    "inequality_rhs",
    "RANDOM_RANK_LIMIT",
]

# largest min(rows, cols) of a Jacobian piece we are willing to eliminate
# with dense random coefficients
RANDOM_RANK_LIMIT = 400


class HodgeSummary:
    """``(h^{n-1,0}, h^{n-2,1})`` and the moduli count of one instance."""

    __slots__ = ("n", "t", "h_top", "h_next", "mu", "vanishing_equals_full")

    def __init__(self, n, t, h_top, h_next, mu):
        if min(h_top, h_next, mu) < 0:
            raise ValueError("Hodge counts must be nonnegative")
        self.n = n
        self.t = t
        self.h_top = h_top
        self.h_next = h_next
        self.mu = mu
        self.vanishing_equals_full = n >= 4

    def __repr__(self):
        return (f"HodgeSummary(n={self.n}, t={self.t}, h_top={self.h_top}, "
                f"h_next={self.h_next}, mu={self.mu})")


def _checked_divisor(fan, d):
    d = d if isinstance(d, TorusDivisor) else TorusDivisor(d)
    ok, _ = is_cartier(fan, d)
    if not ok:
        raise NotCartier(f"{d!r} is not Cartier on {fan!r}")
    if not is_ample_toric(fan, d):
        raise NotAmple(f"{d!r} is not ample on {fan!r}")
    return d


def interior_points(poly, t=1):
    """``l*(t P)`` by reciprocity, cross-checked against strict enumeration."""
    by_reciprocity = poly.interior_count(t)
    direct = poly.dilate(t).count(strict=True)
    if by_reciprocity != direct:
        raise IVHSError(f"reciprocity gives {by_reciprocity}, enumeration gives {direct}")
    return direct


def hypersurface_hodge(fan, d, t):
    """``(h_top, h_next)`` for a generic section of ``t D``."""
    if t < 1:
        raise InputError("t must be at least 1")
    d = _checked_divisor(fan, d)
    delta = divisor_polytope(fan, d)
    delta_t = delta.dilate(t)
    h_top = interior_points(delta, t)
    doubled = interior_points(delta, 2 * t)
    facets = sum(delta_t.facet_interior_counts())
    h_next = doubled - (fan.n + 1) * h_top - facets
    return h_top, h_next


def guard_random(quotient, degree, what):
    """Refuse dense random-coefficient eliminations beyond desk scale."""
    ring = quotient.ring
    cols = len(ring.monomials(degree))
    rows = sum(len(ring.monomials(degree - g.degree)) for g in quotient.generators)
    if min(rows, cols) > RANDOM_RANK_LIMIT:
        raise ComputationTooLarge(
            f"{what}: a {rows} x {cols} elimination with random coefficients is too large; "
            "use a witness section")


def moduli_samples(fan, d, t, seed, k=3, coeff_bound=10):
    """``dim R(f)_{[tD]}`` for sections drawn with seeds ``seed..seed+k-1``."""
    d = d if isinstance(d, TorusDivisor) else TorusDivisor(d)
    ring = cox_ring(fan)
    beta = ring.degree(d.coefficients) * t
    out = []
    for s in range(seed, seed + k):
        f = random_section(fan, beta, coeff_bound, s)
        q = jacobian_ring(f)
        guard_random(q, beta, "moduli count")
        out.append(q.dim(beta))
    return out


def moduli_dim(fan, d, t, seed=0, k=3):
    """Generic ``mu_t = dim R(f)_{[tD]}`` (minimum over ``k`` seeds)."""
    if fan.n < 4:
        raise DimensionTooSmall(f"n = {fan.n} < 4")
    d = _checked_divisor(fan, d)
    return min(moduli_samples(fan, d, t, seed, k))


def hodge_summary(fan, d, t, seed=0):
    if fan.n < 4:
        raise DimensionTooSmall(f"n = {fan.n} < 4: vanishing and full cohomology may differ")
    h_top, h_next = hypersurface_hodge(fan, d, t)
    return HodgeSummary(fan.n, t, h_top, h_next, moduli_dim(fan, d, t, seed))


def inequality_rhs(h_top, h_next):
    """``3 (floor((h_next - 1) / h_top) + 1)``."""
    if h_top < 1:
        raise CriterionInapplicable("h_top = 0: the inequality is undefined")
    return 3 * ((h_next - 1) // h_top + 1)
