"""Complete intersections in projective space via a bigraded Jacobian ring.

For forms ``F_1..F_c`` on ``P^n`` of degrees ``d_1 >= ... >= d_c`` put
``F = sum mu_a F_a`` in ``C[x_0..x_n, mu_1..mu_c]`` with

    deg x_j = (0, 1),    deg mu_a = (1, -d_a).

The Jacobian ideal is generated by ``dF/dmu_a = F_a`` (bidegree ``(0, d_a)``)
and ``dF/dx_j = sum_a mu_a dF_a/dx_j`` (bidegree ``(1, -1)``).  With
``d(X) = sum d_a - (n + 1)`` the primitive Hodge pieces are the quotient
pieces at ``(p, d(X))`` and first-order moduli are the piece at ``(1, 0)``.

Forms.  Unless explicit forms are given, quotient dimensions other than the
moduli count are evaluated on the diagonal witness
``F_a = sum_i (i + 1)^(a - 1) x_i^(d_a)``.  For ``c = 1`` this is the Fermat
hypersurface.  Smoothness of the witness is assumed, not verified, and
certificates say so.
"""
from itertools import combinations_with_replacement
from math import factorial

import numpy as np

from .errors import (DimensionTooSmall, InputError, ModuliIdentificationUnavailable)
from .hodge import guard_random, inequality_rhs
from .nongenericity import Certificate, _run, _seed_warnings, evaluate_projections
from .rings import GradedPolynomial, QuotientRing, graded_lex

__all__ = [
    "BigradedDegree",
    "BigradedRing",
    "CIProblem",
    "bigraded_piece_dim",
    "ci_hodge",
    "ci_moduli",
    "ci_moduli_samples",
    "check_ci",
    "effective_bound",
    "integer_root_ceiling",
]

GENERICITY_NOTE = "genericity assumed (seed policy); smoothness of the forms is not verified"


class BigradedDegree(tuple):
    """``(p, q)``: ``p`` the mu-degree, ``q`` the twisted x-degree."""

    __slots__ = ()

    def __new__(cls, p, q):
        return super().__new__(cls, (int(p), int(q)))

    @property
    def p(self):
        return self[0]

    @property
    def q(self):
        return self[1]

    def __add__(self, other):
        return BigradedDegree(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other):
        return BigradedDegree(self[0] - other[0], self[1] - other[1])

    def __repr__(self):
        return f"({self[0]},{self[1]})"


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _x_monomials(nx, degree):
    out = []
    for combo in combinations_with_replacement(range(nx), degree):
        e = [0] * nx
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


class BigradedRing:
    """``C[x_0..x_n, mu_1..mu_c]``; exponent vectors list x first, then mu."""

    def __init__(self, n, degrees):
        self.n = n
        self.degrees = tuple(degrees)
        self.c = len(self.degrees)
        self.nvars = n + 1 + self.c
        self._cache = {}

    def degree(self, exponents):
        x = exponents[: self.n + 1]
        b = exponents[self.n + 1:]
        return BigradedDegree(sum(b), sum(x) - sum(k * d for k, d in zip(b, self.degrees)))

    def monomials(self, deg):
        deg = BigradedDegree(*deg)
        out = self._cache.get(deg)
        if out is None:
            p, q = deg
            out = []
            if p >= 0:
                for b in _compositions(p, self.c):
                    k = q + sum(x * d for x, d in zip(b, self.degrees))
                    if k >= 0:
                        out.extend(x + b for x in _x_monomials(self.n + 1, k))
            out = graded_lex(out)
            self._cache[deg] = out
        return out


class CIProblem:
    """Complete intersection of ``c`` hypersurfaces in ``P^n``.

    Parameters
    ----------
    n : int
    degrees : sequence of int
        Sorted into decreasing order.
    forms : sequence of dict, optional
        Explicit forms as ``{x-exponent tuple: coefficient}``.  When omitted
        the diagonal witness and random forms are used as described in the
        module docstring.
    """

    def __init__(self, n, degrees, forms=None):
        degs = sorted((int(d) for d in degrees), reverse=True)
        if not degs:
            raise InputError("need at least one degree")
        if any(d < 1 for d in degs):
            raise InputError("degrees must be positive")
        if len(degs) >= n:
            raise InputError(f"c = {len(degs)} must be smaller than n = {n}")
        self.n = int(n)
        self.degrees = tuple(degs)
        self.c = len(degs)
        self.forms = None
        if forms is not None:
            if len(forms) != self.c:
                raise InputError("one form per degree is required")
            self.forms = [dict(f) for f in forms]
        self.ring = BigradedRing(self.n, self.degrees)
        self._quotients = {}

    @property
    def dX(self):
        return sum(self.degrees) - (self.n + 1)

    @property
    def dim(self):
        return self.n - self.c

    def __repr__(self):
        return f"CIProblem(n={self.n}, degrees={list(self.degrees)})"

    def describe(self):
        return {"kind": "ci", "n": self.n, "degrees": list(self.degrees)}

    # -- forms and rings ----------------------------------------------------------

    def diagonal_forms(self):
        nx = self.n + 1
        forms = []
        for a, d in enumerate(self.degrees):
            forms.append({tuple(d * int(i == j) for j in range(nx)): (i + 1) ** a
                          for i in range(nx)})
        return forms

    def random_forms(self, seed, coeff_bound=10):
        rng = np.random.default_rng(seed)
        forms = []
        for d in self.degrees:
            monos = _x_monomials(self.n + 1, d)
            mags = rng.integers(1, coeff_bound + 1, size=len(monos))
            signs = rng.choice(np.array([-1, 1]), size=len(monos))
            forms.append({m: int(a) * int(s) for m, a, s in zip(monos, mags, signs)})
        return forms

    def forms_for(self, which):
        """Forms by label: ``"explicit"``, ``"diagonal"`` or ``("random", seed)``."""
        if which == "explicit":
            if self.forms is None:
                raise InputError("problem has no explicit forms")
            return self.forms
        if which == "diagonal":
            return self.diagonal_forms()
        if isinstance(which, tuple) and which[0] == "random":
            return self.random_forms(which[1])
        raise InputError(f"unknown forms {which!r}")

    def default_forms(self):
        return "explicit" if self.forms is not None else "diagonal"

    def quotient(self, which=None):
        """Bigraded Jacobian ring for the chosen forms (cached)."""
        which = which or self.default_forms()
        q = self._quotients.get(which)
        if q is None:
            q = QuotientRing(self.ring, self._generators(self.forms_for(which)))
            self._quotients[which] = q
        return q

    def _generators(self, forms):
        nx = self.n + 1
        zeros = (0,) * self.c
        gens = []
        for a, (form, d) in enumerate(zip(forms, self.degrees)):
            for e in form:
                if len(e) != nx or sum(e) != d:
                    raise InputError(f"form {a} has a term {e} that is not of degree {d}")
            gens.append(GradedPolynomial(self.ring, {tuple(e) + zeros: c for e, c in form.items()},
                                         BigradedDegree(0, d)))
        for j in range(nx):
            terms = {}
            for a, form in enumerate(forms):
                mu = tuple(int(b == a) for b in range(self.c))
                for e, coef in form.items():
                    if e[j]:
                        f = list(e)
                        f[j] -= 1
                        key = tuple(f) + mu
                        terms[key] = terms.get(key, 0) + coef * e[j]
            gens.append(GradedPolynomial(self.ring, terms, BigradedDegree(1, -1)))
        return gens


def bigraded_piece_dim(prob, deg, part="quotient", forms=None):
    """Dimension of one piece at bidegree ``deg``; ``part`` names which (ambient, jacobian, quotient)."""
    deg = BigradedDegree(*deg)
    if part == "ambient":
        return len(prob.ring.monomials(deg))
    q = prob.quotient(forms)
    if isinstance(forms, tuple):
        guard_random(q, deg, "bigraded piece")
    piece = q.piece(deg)
    if part == "jacobian":
        return piece.ideal_dim
    if part == "quotient":
        return piece.dim
    raise InputError(f"unknown part {part!r}")


def ci_hodge(prob, p, forms=None):
    """Primitive Hodge number ``h^{n-c-p, p}`` as the quotient piece at ``(p, d(X))``."""
    if not 0 <= p <= prob.dim:
        raise InputError(f"p must lie in 0..{prob.dim}")
    return bigraded_piece_dim(prob, (p, prob.dX), "quotient", forms)


def ci_moduli_samples(prob, seed, k=3):
    if prob.dX < 0:
        raise ModuliIdentificationUnavailable(f"d(X) = {prob.dX} < 0")
    return [bigraded_piece_dim(prob, (1, 0), "quotient", ("random", s))
            for s in range(seed, seed + k)]


def ci_moduli(prob, seed=0, k=3):
    """First-order moduli ``dim R_(1,0)`` for generic forms (minimum over seeds)."""
    if prob.forms is not None:
        if prob.dX < 0:
            raise ModuliIdentificationUnavailable(f"d(X) = {prob.dX} < 0")
        return bigraded_piece_dim(prob, (1, 0), "quotient", "explicit")
    return min(ci_moduli_samples(prob, seed, k))


def check_ci(prob, seed=0):
    """Non-genericity certificate for a complete intersection."""
    if prob.dim < 3:
        raise DimensionTooSmall(f"dim X = {prob.dim} < 3")
    if prob.dX < 0:
        raise ModuliIdentificationUnavailable(f"d(X) = {prob.dX} < 0")
    assert prob.dX == sum(prob.degrees) - prob.n - 1
    which = prob.default_forms()
    seeds = [seed, seed + 1, seed + 2]
    e = BigradedDegree(1, 0)
    c = BigradedDegree(0, prob.dX)
    if which == "explicit":
        mu_task = lambda: [ci_moduli(prob)]
    else:
        mu_task = lambda: ci_moduli_samples(prob, seed)
    h_top, h_next, samples, (p0, p1, p1_surj) = _run([
        lambda: ci_hodge(prob, 0),
        lambda: ci_hodge(prob, 1),
        mu_task,
        lambda: evaluate_projections(prob.quotient(which), e, c),
    ])
    warnings = [] if which == "explicit" else _seed_warnings(samples, seeds, "dim R_(1,0)")
    mu = min(samples)
    witness_mu = prob.quotient(which).dim(e)
    if witness_mu != mu:
        warnings.append(f"witness forms have dim R_(1,0) = {witness_mu}, generic value is {mu}")
    warnings.append(GENERICITY_NOTE)
    if h_top == 0:
        rhs, holds = None, False
        warnings.append("criterion inapplicable: h_top = 0")
    else:
        rhs = inequality_rhs(h_top, h_next)
        holds = mu >= rhs
    instance = prob.describe()
    instance["dX"] = prob.dX
    cert = Certificate(instance, h_top, h_next, mu, rhs, holds, p0, "rank", p1, p1_surj,
                       which, seeds, warnings)
    assert cert.verify()
    return cert


def integer_root_ceiling(x, r):
    """Smallest integer ``k >= 0`` with ``k**r >= x``."""
    if r < 1:
        raise InputError("root index must be positive")
    if x <= 0:
        return 0
    lo, hi = 0, 1
    while hi ** r < x:
        hi *= 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid ** r >= x:
            hi = mid
        else:
            lo = mid
    return hi


def effective_bound(n, c):
    """Degree bound on ``d(X)`` beyond which the criterion is known to apply."""
    if not 1 <= c < n:
        raise InputError("need 1 <= c < n")
    if c == 1:
        return max(n, integer_root_ceiling(factorial(n) * (2 ** n * 3 + 4 + (n + 1) ** 2), n))
    first = integer_root_ceiling(3 * n ** n * c ** (n + 1) * 2 ** n + 1, n - c)
    second = integer_root_ceiling(factorial(n) * c ** n * (3 + c ** 2 + (n + 1) ** 2), c)
    return max(n, first, second)
