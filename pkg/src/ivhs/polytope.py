"""Lattice polytopes in H-representation and lattice-point counting.

A polytope is the solution set of integer inequalities ``<a, m> + c >= 0``.
At construction the inequalities are projected coordinate by coordinate
with Fourier-Motzkin elimination.  The projections give an exact bounding
box and, for every prefix of coordinates, the interval of feasible values of
the next coordinate, so enumeration never explores an empty rational slice.

Strict counts use the fact that for integer data ``<a, m> + c > 0`` is the
same as ``<a, m> + c >= 1`` on lattice points.  The relative interior is cut
out by keeping the implicit equalities and making every other inequality
strict, so lower-dimensional polytopes (facets in particular) need no
change of coordinates.
"""
from fractions import Fraction
from math import gcd, floor, ceil

from .errors import InputError, UnboundedPolytopeError, NotLatticePolytopeError
from .linalg import RationalPolynomial, interpolate_polynomial, rank

__all__ = [
    "LatticePolytope",
    "lattice_points",
    "count_lattice_points",
    "ehrhart_polynomial",
    "interior_count",
    "facet_interior_counts",
    "normalized_volume",
]

# Fourier-Motzkin rows are (direction tuple of ints, constant Fraction, strict flag)


def _normalize(a, c, strict):
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        return tuple(a), Fraction(c), strict
    return tuple(x // g for x in a), Fraction(c) / g, strict


def _dedupe(rows):
    best = {}
    for a, c, strict in rows:
        if not any(a):
            best.setdefault(None, []).append((a, c, strict))
            continue
        old = best.get(a)
        if old is None or c < old[1] or (c == old[1] and strict and not old[2]):
            best[a] = (a, c, strict)
    consts = best.pop(None, [])
    return list(best.values()) + consts


def _eliminate(rows, k):
    """Project out coordinate ``k`` (the coordinate stays, with coefficient 0)."""
    pos, neg, rest = [], [], []
    for row in rows:
        a = row[0][k]
        (pos if a > 0 else neg if a < 0 else rest).append(row)
    out = list(rest)
    for ap, cp, sp in pos:
        for an, cn, sn in neg:
            lp, ln = ap[k], -an[k]
            a = [ln * x + lp * y for x, y in zip(ap, an)]
            out.append(_normalize(a, ln * cp + lp * cn, sp or sn))
    return _dedupe(out)


def _feasible(rows, n):
    """Exact feasibility of a system of (possibly strict) inequalities over Q."""
    for k in range(n - 1, -1, -1):
        rows = _eliminate(rows, k)
        for a, c, strict in rows:
            if not any(a) and (c < 0 or (strict and c == 0)):
                return False
    for a, c, strict in rows:
        if c < 0 or (strict and c == 0):
            return False
    return True


class LatticePolytope:
    """Polytope ``{m in R^n : <a_i, m> + c_i >= 0 for all i}`` with integer data.

    Parameters
    ----------
    inequalities : iterable of (a, c)
        ``a`` an integer vector of length ``dim_ambient`` and ``c`` an integer.
    dim_ambient : int, optional
        Needed only when there are no inequalities.

    Raises
    ------
    UnboundedPolytopeError
        If the feasible set is nonempty and unbounded.
    """

    def __init__(self, inequalities, dim_ambient=None):
        ineqs = []
        for a, c in inequalities:
            a = tuple(int(x) for x in a)
            if int(c) != c or any(int(x) != x for x in a):
                raise InputError("inequality data must be integral")
            ineqs.append((a, int(c)))
        if dim_ambient is None:
            if not ineqs:
                raise InputError("cannot infer the ambient dimension")
            dim_ambient = len(ineqs[0][0])
        if any(len(a) != dim_ambient for a, _ in ineqs):
            raise InputError("inequality vectors have inconsistent lengths")
        self.dim_ambient = dim_ambient
        self.inequalities = tuple(ineqs)
        self._analyze()

    # -- construction helpers -------------------------------------------------

    @classmethod
    def simplex(cls, n, k=1):
        """``k`` times the standard simplex ``{x >= 0, sum x <= k}``."""
        rows = [(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
        rows.append(((-1,) * n, k))
        return cls(rows, n)

    @classmethod
    def box(cls, lengths):
        """Product of segments ``[0, l_i]``."""
        n = len(lengths)
        rows = []
        for i, l in enumerate(lengths):
            e = tuple(int(i == j) for j in range(n))
            rows.append((e, 0))
            rows.append((tuple(-x for x in e), l))
        return cls(rows, n)

    def product(self, other):
        n1, n2 = self.dim_ambient, other.dim_ambient
        rows = [(a + (0,) * n2, c) for a, c in self.inequalities]
        rows += [((0,) * n1 + a, c) for a, c in other.inequalities]
        return LatticePolytope(rows, n1 + n2)

    def dilate(self, t):
        """The dilation ``tP`` realized by scaling the constants."""
        if t < 0:
            raise InputError("dilation factor must be nonnegative")
        return LatticePolytope([(a, t * c) for a, c in self.inequalities], self.dim_ambient)

    def translate(self, v):
        v = tuple(int(x) for x in v)
        return LatticePolytope(
            [(a, c - sum(x * y for x, y in zip(a, v))) for a, c in self.inequalities],
            self.dim_ambient,
        )

    # -- analysis ---------------------------------------------------------------

    def _fm(self, extra=()):
        return [_normalize(a, c, s) for a, c, s in
                [(a, c, False) for a, c in self.inequalities] + list(extra)]

    def _analyze(self):
        n = self.dim_ambient
        base = self._fm()
        self.is_empty = not _feasible(base, n)
        self._implicit = []
        self._facets = []
        if self.is_empty:
            self.bounding_box = tuple((0, -1) for _ in range(n))
            self.dim = -1
            self._chain = None
            return
        # bounding box from the projection onto each single coordinate
        box = []
        for k in range(n):
            rows = base
            for j in range(n):
                if j != k:
                    rows = _eliminate(rows, j)
            lo, hi = None, None
            for a, c, _ in rows:
                if a[k] > 0:
                    b = -c / a[k]
                    lo = b if lo is None else max(lo, b)
                elif a[k] < 0:
                    b = -c / a[k]
                    hi = b if hi is None else min(hi, b)
            if lo is None or hi is None:
                raise UnboundedPolytopeError(f"coordinate {k} is unbounded")
            box.append((ceil(lo), floor(hi)))
        self.bounding_box = tuple(box)
        # classify inequalities: implicit equality, redundant, or facet-defining
        dropped = set()
        for i, (a, c) in enumerate(self.inequalities):
            strict_pos = _normalize(a, c, True)
            if not _feasible(base + [strict_pos], n):
                self._implicit.append(i)
                continue
            others = [r for j, r in enumerate(base) if j != i and j not in dropped]
            violated = _normalize(tuple(-x for x in a), -c, True)
            # redundant iff the inequalities kept so far force it
            if not _feasible(others + [violated], n):
                dropped.add(i)
                continue
            self._facets.append(i)
        eq_dirs = [self.inequalities[i][0] for i in self._implicit]
        self.dim = n - (rank(eq_dirs) if eq_dirs else 0)
        self._chain = self._projection_chain(base)

    def _projection_chain(self, rows):
        n = self.dim_ambient
        chain = [None] * n
        cur = rows
        for k in range(n - 1, -1, -1):
            chain[k] = [(a[: k + 1], c) for a, c, _ in cur if any(a[: k + 1])]
            cur = _eliminate(cur, k)
        return chain

    @property
    def is_full_dimensional(self):
        return self.dim == self.dim_ambient

    @property
    def facet_indices(self):
        """Indices of the facet-defining inequalities (full-dimensional case)."""
        return tuple(self._facets)

    def relative_interior(self):
        """Integer model of the relative interior, as a polytope.

        Implicit equalities are kept as equalities and every other inequality
        ``<a, m> + c >= 0`` becomes ``<a, m> + c - 1 >= 0``.
        """
        rows = []
        implicit = set(self._implicit)
        for i, (a, c) in enumerate(self.inequalities):
            if i in implicit:
                rows.append((a, c))
                rows.append((tuple(-x for x in a), -c))
            else:
                rows.append((a, c - 1))
        return LatticePolytope(rows, self.dim_ambient)

    # -- enumeration ------------------------------------------------------------

    def _ranges(self, k, prefix):
        lo, hi = self.bounding_box[k]
        for a, c in self._chain[k]:
            rhs = -(c + sum(x * y for x, y in zip(a, prefix)))
            ak = a[k]
            if ak > 0:
                lo = max(lo, ceil(rhs / ak))
            elif ak < 0:
                hi = min(hi, floor(rhs / ak))
            elif rhs > 0:
                return 0, -1
        return lo, hi

    def _walk(self, k, prefix):
        lo, hi = self._ranges(k, prefix)
        if k == self.dim_ambient - 1:
            for x in range(lo, hi + 1):
                yield prefix + (x,)
            return
        for x in range(lo, hi + 1):
            yield from self._walk(k + 1, prefix + (x,))

    def _count(self, k, prefix):
        lo, hi = self._ranges(k, prefix)
        if k == self.dim_ambient - 1:
            return max(0, hi - lo + 1)
        return sum(self._count(k + 1, prefix + (x,)) for x in range(lo, hi + 1))

    def lattice_points(self, strict=False):
        """Lattice points, or those of the relative interior when ``strict``."""
        if strict:
            return self.relative_interior().lattice_points()
        if self.is_empty:
            return []
        if self.dim_ambient == 0:
            return [()]
        return list(self._walk(0, ()))

    def count(self, strict=False):
        if strict:
            return self.relative_interior().count()
        if self.is_empty:
            return 0
        if self.dim_ambient == 0:
            return 1
        return self._count(0, ())

    def contains(self, m):
        return all(sum(x * y for x, y in zip(a, m)) + c >= 0 for a, c in self.inequalities)

    # -- Ehrhart theory ------------------------------------------------------------

    def ehrhart_polynomial(self):
        """Ehrhart polynomial, interpolated from counts at ``t = 0..dim``.

        The result is checked against direct counts at ``dim+1`` and
        ``dim+2``; a mismatch means some vertex is not a lattice point.
        """
        if self.is_empty:
            raise NotLatticePolytopeError("empty polytope has no Ehrhart polynomial")
        d = self.dim
        pts = [(t, self.dilate(t).count()) for t in range(d + 1)]
        poly = interpolate_polynomial(pts)
        if poly(0) != 1:
            raise NotLatticePolytopeError(f"E(0) = {poly(0)} instead of 1")
        for t in (d + 1, d + 2):
            direct = self.dilate(t).count()
            if poly(t) != direct:
                raise NotLatticePolytopeError(
                    f"interpolated count {poly(t)} at t={t} differs from {direct}; "
                    "the polytope is not a lattice polytope")
        return poly

    def interior_count(self, t=1):
        """Number of relative-interior lattice points of ``tP`` via reciprocity."""
        if t < 1:
            raise InputError("t must be at least 1")
        e = self.ehrhart_polynomial()
        val = (-1) ** self.dim * e(-t)
        return int(val)

    def facet(self, i):
        """The face cut out by inequality ``i`` as an equality."""
        a, c = self.inequalities[i]
        return LatticePolytope(list(self.inequalities) + [(tuple(-x for x in a), -c)],
                               self.dim_ambient)

    def facet_interior_counts(self):
        """Relative-interior lattice point counts, one per facet."""
        if not self.is_full_dimensional:
            raise InputError("facet counts need a full-dimensional polytope")
        return [self.facet(i).count(strict=True) for i in self._facets]

    def normalized_volume(self):
        """Leading Ehrhart coefficient in the ambient dimension (0 if degenerate)."""
        if self.is_empty or not self.is_full_dimensional:
            return Fraction(0)
        return self.ehrhart_polynomial().coefficient(self.dim_ambient)

    def __repr__(self):
        return f"LatticePolytope({list(self.inequalities)!r})"


def lattice_points(p, strict=False):
    return p.lattice_points(strict)


def count_lattice_points(p, strict=False):
    return p.count(strict)


def ehrhart_polynomial(p):
    return p.ehrhart_polynomial()


def interior_count(p, t):
    return p.interior_count(t)


def facet_interior_counts(p):
    return p.facet_interior_counts()


def normalized_volume(p):
    return p.normalized_volume()
