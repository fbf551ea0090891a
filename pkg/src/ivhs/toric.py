"""Complete simplicial fans, their Chow groups, and torus-invariant divisors.

The Cox ring of a fan with rays ``n_1..n_r`` is graded by the Chow group
``A_{n-1} = Z^r / P(M)``, where ``P`` is the ``r x n`` matrix of rays and
``M = Z^n``.  A :class:`ChowPresentation` maps exponent vectors to canonical
:class:`DegreeClass` values:

* the free part is ``K a`` with ``K`` the row Hermite basis of the integer
  left kernel of ``P``, so on projective space every ``D_j`` has degree 1
  and on weighted projective space ``D_j`` has degree ``q_j``;
* the torsion part comes from the Smith form ``U P V = S``, reduced modulo
  the nontrivial invariant factors.
"""
from itertools import combinations
from math import gcd, lcm

import numpy as np

from .errors import InputError, NotCartier
from .intmat import hermite_normal_form, integer_kernel, smith_normal_form, solve_integer
from .linalg import rank, solve
from .polytope import LatticePolytope

__all__ = [
    "Fan",
    "ChowPresentation",
    "DegreeClass",
    "TorusDivisor",
    "WeightSystem",
    "chow_presentation",
    "monomial_degree",
    "is_cartier",
    "is_ample_wps",
    "is_ample_toric",
    "divisor_polytope",
    "beta0",
    "wps_fan",
    "projective_space_fan",
]


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


class Fan:
    """Complete simplicial fan.

    Parameters
    ----------
    rays : sequence of integer vectors
        Primitive ray generators, all of length ``n``.
    max_cones : sequence of index sequences
        Maximal cones, each a set of ``n`` ray indices.
    name : str, optional

    Construction checks that rays are primitive and cones simplicial.
    Completeness is checked twice: every wall of a maximal cone must be
    shared by exactly two maximal cones, and a batch of random directions
    (plus all rays and pairwise ray midpoints) must be covered, each random
    direction by exactly one cone interior.
    """

    def __init__(self, rays, max_cones, name=None, check=True):
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        if not self.rays:
            raise InputError("a fan needs at least one ray")
        self.n = len(self.rays[0])
        self.r = len(self.rays)
        if any(len(r) != self.n for r in self.rays):
            raise InputError("rays have inconsistent lengths")
        self.max_cones = tuple(tuple(sorted(int(i) for i in c)) for c in max_cones)
        self.name = name
        if check:
            self._validate()
        self._chow = None

    def _validate(self):
        n = self.n
        for j, r in enumerate(self.rays):
            g = 0
            for x in r:
                g = gcd(g, x)
            if g != 1:
                raise InputError(f"ray {j} = {r} is not primitive")
        if rank(self.rays) != n:
            raise InputError("rays do not span N (fan cannot be complete)")
        if not self.max_cones:
            raise InputError("no maximal cones")
        for c in self.max_cones:
            if len(c) != n or len(set(c)) != n or any(not 0 <= i < self.r for i in c):
                raise InputError(f"cone {c} is not an n-subset of the rays")
            if rank([self.rays[i] for i in c]) != n:
                raise InputError(f"cone {c} is not simplicial (rays dependent)")
        walls = {}
        for c in self.max_cones:
            for w in combinations(c, n - 1):
                walls[w] = walls.get(w, 0) + 1
        bad = [w for w, k in walls.items() if k != 2]
        if bad:
            raise InputError(f"fan is not complete: wall {bad[0]} lies in {walls[bad[0]]} cone(s)")
        probes = list(self.rays)
        probes += [tuple(a + b for a, b in zip(self.rays[i], self.rays[j]))
                   for i, j in combinations(range(self.r), 2)]
        for v in probes:
            if any(v) and not any(self._in_cone(c, v) is not None for c in self.max_cones):
                raise InputError(f"direction {v} is not covered by the fan")
        rng = np.random.default_rng(0)
        for _ in range(16):
            v = tuple(int(x) for x in rng.integers(-97, 98, size=n))
            if not any(v):
                continue
            coeffs = [self._in_cone(c, v) for c in self.max_cones]
            hits = [lam for lam in coeffs if lam is not None]
            if not hits:
                raise InputError(f"direction {v} is not covered by the fan")
            if any(0 in lam for lam in hits):
                continue  # landed on a wall, not informative
            if len(hits) != 1:
                raise InputError(f"direction {v} lies in {len(hits)} cone interiors")

    def _in_cone(self, cone, v):
        """Cone coordinates of ``v`` if it lies in ``cone``, else None."""
        basis = [[self.rays[i][k] for i in cone] for k in range(self.n)]
        lam = solve(basis, list(v))
        return lam if all(x >= 0 for x in lam) else None

    @property
    def ray_matrix(self):
        return [list(r) for r in self.rays]

    @property
    def chow(self):
        if self._chow is None:
            self._chow = ChowPresentation(self)
        return self._chow

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Fan{label} n={self.n} rays={self.r} cones={len(self.max_cones)}>"

    def to_document(self):
        doc = {"rays": [list(r) for r in self.rays], "max_cones": [list(c) for c in self.max_cones]}
        if self.name:
            doc["name"] = self.name
        return doc


class DegreeClass:
    """Element of the Chow group in canonical coordinates."""

    __slots__ = ("free", "torsion", "presentation")

    def __init__(self, free, torsion, presentation):
        self.free = tuple(int(x) for x in free)
        self.torsion = tuple(int(x) % d for x, d in zip(torsion, presentation.torsion_orders))
        self.presentation = presentation

    def _check(self, other):
        if not isinstance(other, DegreeClass) or other.presentation is not self.presentation:
            raise InputError("degree classes from different presentations")

    def __add__(self, other):
        self._check(other)
        return DegreeClass([a + b for a, b in zip(self.free, other.free)],
                           [a + b for a, b in zip(self.torsion, other.torsion)], self.presentation)

    def __sub__(self, other):
        self._check(other)
        return DegreeClass([a - b for a, b in zip(self.free, other.free)],
                           [a - b for a, b in zip(self.torsion, other.torsion)], self.presentation)

    def __neg__(self):
        return DegreeClass([-a for a in self.free], [-a for a in self.torsion], self.presentation)

    def __mul__(self, k):
        k = int(k)
        return DegreeClass([k * a for a in self.free], [k * a for a in self.torsion],
                           self.presentation)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not any(self.free) and not any(self.torsion)
        return (isinstance(other, DegreeClass) and other.presentation is self.presentation
                and self.free == other.free and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free, self.torsion))

    def is_zero(self):
        return not any(self.free) and not any(self.torsion)

    def __repr__(self):
        return f"DegreeClass({list(self.free)}, torsion={list(self.torsion)})"

    def __str__(self):
        if not self.torsion and len(self.free) == 1:
            return str(self.free[0])
        parts = ",".join(str(x) for x in self.free)
        if self.torsion:
            parts += ";" + ",".join(f"{x} mod {d}" for x, d in
                                    zip(self.torsion, self.presentation.torsion_orders))
        return f"({parts})"


class ChowPresentation:
    """Cokernel presentation ``Z^r -> A_{n-1}`` of a fan's ray matrix."""

    def __init__(self, fan):
        self.fan = fan
        p = fan.ray_matrix
        r, n = fan.r, fan.n
        u, s, _ = smith_normal_form(p)
        diag = [s[i][i] for i in range(n)]
        if any(d == 0 for d in diag):
            raise InputError("ray matrix has deficient rank")
        self.invariant_factors = tuple(diag)
        self._torsion_rows = [u[i] for i in range(n) if diag[i] > 1]
        self.torsion_orders = tuple(d for d in diag if d > 1)
        pt = [list(col) for col in zip(*p)]
        self._free_rows = hermite_normal_form(integer_kernel(pt, r))
        self.rank = len(self._free_rows)
        if self.rank != r - n:
            raise InputError("unexpected Chow group rank")
        self._map = self._free_rows + self._torsion_rows
        self._ray_degrees = None

    @property
    def has_torsion(self):
        return bool(self.torsion_orders)

    def degree(self, exponents):
        a = [int(x) for x in exponents]
        if len(a) != self.fan.r:
            raise InputError(f"expected {self.fan.r} exponents, got {len(a)}")
        return DegreeClass([_dot(row, a) for row in self._free_rows],
                           [_dot(row, a) for row in self._torsion_rows], self)

    def ray_degrees(self):
        if self._ray_degrees is None:
            r = self.fan.r
            self._ray_degrees = tuple(self.degree([int(i == j) for i in range(r)]) for j in range(r))
        return self._ray_degrees

    def zero(self):
        return DegreeClass([0] * self.rank, [0] * len(self.torsion_orders), self)

    def from_free(self, free, torsion=None):
        return DegreeClass(free, torsion or [0] * len(self.torsion_orders), self)

    def preimage(self, beta):
        """An integer vector ``a`` with ``degree(a) == beta``."""
        r = self.fan.r
        k = len(self.torsion_orders)
        rows = [list(row) + [0] * k for row in self._free_rows]
        for i, row in enumerate(self._torsion_rows):
            rows.append(list(row) + [-int(j == i) * self.torsion_orders[i] for j in range(k)])
        target = list(beta.free) + list(beta.torsion)
        sol = solve_integer(rows, target)
        if sol is None:
            raise InputError(f"degree {beta!r} has no preimage")
        a = sol[:r]
        assert self.degree(a) == beta
        return a

    def parse(self, value):
        """Degree class from an int (rank one), a free vector, or a DegreeClass."""
        if isinstance(value, DegreeClass):
            return value
        if isinstance(value, int):
            if self.rank != 1:
                raise InputError("an integer degree needs a Chow group of rank 1")
            return self.from_free([value])
        return self.from_free(list(value))


def chow_presentation(fan):
    return fan.chow


def monomial_degree(fan, exponents):
    return fan.chow.degree(exponents)


def beta0(fan):
    """Degree of the product of all Cox variables."""
    return fan.chow.degree([1] * fan.r)


class TorusDivisor:
    """Torus-invariant Weil divisor ``sum a_j D_j``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(int(x) for x in coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __mul__(self, k):
        return TorusDivisor([int(k) * a for a in self.coefficients])

    __rmul__ = __mul__

    def __add__(self, other):
        return TorusDivisor([a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __eq__(self, other):
        return isinstance(other, TorusDivisor) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"TorusDivisor({list(self.coefficients)})"


def _as_divisor(fan, d):
    d = d if isinstance(d, TorusDivisor) else TorusDivisor(d)
    if len(d) != fan.r:
        raise InputError(f"divisor has {len(d)} coefficients, fan has {fan.r} rays")
    return d


def cartier_data(fan, d):
    """Rational solutions ``u(sigma)`` of ``<u, n_j> = -a_j`` for ``j`` in sigma."""
    d = _as_divisor(fan, d)
    data = {}
    for cone in fan.max_cones:
        mat = [list(fan.rays[j]) for j in cone]
        rhs = [-d.coefficients[j] for j in cone]
        data[cone] = solve(mat, rhs)
    return data


def is_cartier(fan, d):
    """Cartier test; returns ``(flag, witness)`` with integral ``u(sigma)`` per cone."""
    data = cartier_data(fan, d)
    if all(x.denominator == 1 for u in data.values() for x in u):
        return True, {c: tuple(int(x) for x in u) for c, u in data.items()}
    return False, None


def is_ample_toric(fan, d):
    """Normal-fan test for an ample Cartier divisor.

    For each maximal cone the local datum ``u(sigma)`` must satisfy the
    inequalities of the rays outside sigma strictly.  Equivalently the
    divisor polytope is full-dimensional with vertices ``u(sigma)`` and its
    normal fan is the given fan.
    """
    d = _as_divisor(fan, d)
    ok, witness = is_cartier(fan, d)
    if not ok:
        raise NotCartier(f"{d!r} is not Cartier")
    for cone, u in witness.items():
        inside = set(cone)
        for j, ray in enumerate(fan.rays):
            if j in inside:
                continue
            if _dot(u, ray) + d.coefficients[j] <= 0:
                return False
    return True


def divisor_polytope(fan, d):
    """``{m : <m, n_j> + a_j >= 0 for all j}``."""
    d = _as_divisor(fan, d)
    return LatticePolytope([(ray, a) for ray, a in zip(fan.rays, d.coefficients)], fan.n)


class WeightSystem:
    """Well-formed weights ``(q_0, ..., q_n)`` with ``q_0 = 1``."""

    def __init__(self, weights):
        w = tuple(int(q) for q in weights)
        if len(w) < 2:
            raise InputError("need at least two weights")
        if any(q <= 0 for q in w):
            raise InputError("weights must be positive")
        g = 0
        for q in w[1:]:
            g = gcd(g, q)
        if w[0] != 1 or g != 1:
            raise InputError(f"weights {w} are not well formed (need q_0 = gcd(q_1..q_n) = 1)")
        self.weights = w
        self.n = len(w) - 1
        self.m = lcm(*w[1:])
        self.s = sum(w)

    def __repr__(self):
        return f"WeightSystem({list(self.weights)})"

    def __eq__(self, other):
        return isinstance(other, WeightSystem) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)


def is_ample_wps(w, d):
    return int(d) > 0


def wps_fan(w):
    """Fan of weighted projective space in the basis ``f_1..f_n`` of N."""
    if not isinstance(w, WeightSystem):
        w = WeightSystem(w)
    n = w.n
    rays = [tuple(-q for q in w.weights[1:])]
    rays += [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cones = list(combinations(range(n + 1), n))
    return Fan(rays, cones, name="WPS(" + ",".join(map(str, w.weights)) + ")")


def projective_space_fan(n):
    fan = wps_fan([1] * (n + 1))
    fan.name = f"P{n}"
    return fan
