"""Cox rings of fans and the graded pieces of their Jacobian rings.

The monomials of degree ``beta`` in the Cox ring are ``a* + P m`` where
``a*`` is any exponent vector of degree ``beta``, ``P`` the ray matrix, and
``m`` runs over the lattice points of the divisor polytope of ``a*``.  This
makes ``|S_beta|`` equal to a lattice count by construction; the tests check
it against an independent stars-and-bars count.

For a section ``f`` the Jacobian ring ``R(f) = S / (df/dz_1, ..., df/dz_r)``
is a :class:`~ivhs.rings.QuotientRing`.
"""
import numpy as np

from .errors import InputError
from .polytope import LatticePolytope
from .rings import GradedPolynomial, QuotientRing, graded_lex

__all__ = [
    "CoxRing",
    "GradedPieceBasis",
    "cox_ring",
    "monomial_basis",
    "random_section",
    "fermat_section",
    "jacobian_ring",
    "jacobian_piece_dim",
    "ring_piece_dim",
    "multiplication_rank",
    "GradedPolynomial",
]


class GradedPieceBasis:
    """Monomial basis of ``S_beta`` in graded-lex order."""

    __slots__ = ("degree", "monomials")

    def __init__(self, degree, monomials):
        self.degree = degree
        self.monomials = tuple(monomials)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __repr__(self):
        return f"GradedPieceBasis(degree={self.degree}, size={len(self)})"


class CoxRing:
    """Homogeneous coordinate ring of a fan, graded by its Chow group."""

    def __init__(self, fan):
        self.fan = fan
        self.chow = fan.chow
        self.nvars = fan.r
        self._cache = {}

    def degree(self, exponents):
        return self.chow.degree(exponents)

    def zero_degree(self):
        return self.chow.zero()

    def monomials(self, beta):
        beta = self.chow.parse(beta)
        out = self._cache.get(beta)
        if out is None:
            fan = self.fan
            a = self.chow.preimage(beta)
            poly = LatticePolytope([(ray, x) for ray, x in zip(fan.rays, a)], fan.n)
            pts = poly.lattice_points()
            out = graded_lex(
                tuple(x + sum(r * y for r, y in zip(ray, m)) for x, ray in zip(a, fan.rays))
                for m in pts)
            self._cache[beta] = out
        return out


def cox_ring(fan):
    """The Cox ring of ``fan`` (one instance per fan)."""
    ring = getattr(fan, "_cox", None)
    if ring is None:
        ring = CoxRing(fan)
        fan._cox = ring
    return ring


def monomial_basis(fan, beta):
    ring = cox_ring(fan)
    beta = ring.chow.parse(beta)
    return GradedPieceBasis(beta, ring.monomials(beta))


def _nonzero_coefficients(rng, size, bound):
    mags = rng.integers(1, bound + 1, size=size)
    signs = rng.choice(np.array([-1, 1]), size=size)
    return [int(m) * int(s) for m, s in zip(mags, signs)]


def random_section(fan, beta, coeff_bound=10, seed=0):
    """Section with independent uniform coefficients in ``[-B, B] minus {0}``."""
    if coeff_bound < 1:
        raise InputError("coefficient bound must be positive")
    ring = cox_ring(fan)
    beta = ring.chow.parse(beta)
    monos = ring.monomials(beta)
    if not monos:
        raise InputError(f"graded piece of degree {beta} is empty")
    rng = np.random.default_rng(seed)
    coeffs = _nonzero_coefficients(rng, len(monos), coeff_bound)
    return GradedPolynomial(ring, dict(zip(monos, coeffs)), beta)


def fermat_section(fan, beta):
    """``sum z_j^{k_j}`` with ``k_j [D_j] = beta``, or None if some ``k_j`` does not exist."""
    ring = cox_ring(fan)
    beta = ring.chow.parse(beta)
    terms = {}
    for j, dj in enumerate(ring.chow.ray_degrees()):
        k = None
        for f, b in zip(dj.free, beta.free):
            if f == 0:
                if b != 0:
                    return None
                continue
            if b % f:
                return None
            if k is None:
                k = b // f
            elif k != b // f:
                return None
        if k is None or k < 1 or dj * k != beta:
            return None
        e = [0] * fan.r
        e[j] = k
        terms[tuple(e)] = 1
    return GradedPolynomial(ring, terms, beta)


def jacobian_ring(section):
    """The Jacobian ring of a Cox-ring section (cached on the section)."""
    if section._jacobian is None:
        ring = section.ring
        degs = ring.chow.ray_degrees()
        partials = [section.derivative(j, section.degree - degs[j]) for j in range(ring.nvars)]
        section._jacobian = QuotientRing(ring, partials)
    return section._jacobian


def jacobian_piece_dim(fan, s, gamma):
    gamma = cox_ring(fan).chow.parse(gamma)
    return jacobian_ring(s).ideal_dim(gamma)


def ring_piece_dim(fan, s, gamma):
    gamma = cox_ring(fan).chow.parse(gamma)
    return jacobian_ring(s).dim(gamma)


def multiplication_rank(fan, s, e, c):
    """``(rank, injective, surjective_onto)`` of ``R_e -> Hom(R_c, R_{c+e})``."""
    chow = cox_ring(fan).chow
    return jacobian_ring(s).multiplication_rank(chow.parse(e), chow.parse(c))

