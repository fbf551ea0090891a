"""Incremental echelon form for sparse exact vectors.

Vectors are dicts mapping an integer coordinate to a nonzero Fraction.
Coordinates are ordered by their integer value and the leading term of a
vector is its smallest coordinate.  Pivot rows are kept monic; they are not
inter-reduced, but every pivot row only contains coordinates larger than its
pivot, so reducing coordinates in increasing order always terminates.

Graded pieces of Jacobian rings are the main client: rows are multiples of
partial derivatives, and the residual of a vector after full reduction is
its normal form modulo the span, written in the standard (non-pivot)
coordinates.
"""
from fractions import Fraction
from heapq import heapify, heappop, heappush

__all__ = ["SparseEchelon"]


class SparseEchelon:
    """Row echelon form built one vector at a time.

    Parameters
    ----------
    track : bool
        If true, every inserted vector carries a tag (a sparse vector over
        some source space) and tags of vectors that reduce to zero are
        collected in :attr:`relations`.  With unit tags this computes the
        kernel of the map sending the source basis to the inserted vectors.
    """

    def __init__(self, track=False):
        self.track = track
        self._rows = {}
        self._tags = {}
        self.relations = []

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    @property
    def pivots(self):
        return self._rows.keys()

    def is_pivot(self, key):
        return key in self._rows

    def reduce(self, vec, tag=None):
        """Fully reduce ``vec``; returns ``(residual, reduced_tag)``."""
        v = {k: Fraction(c) for k, c in vec.items() if c}
        t = None
        if self.track:
            t = {k: Fraction(c) for k, c in (tag or {}).items() if c}
        rows = self._rows
        heap = [k for k in v if k in rows]
        heapify(heap)
        while heap:
            k = heappop(heap)
            c = v.pop(k, None)
            if not c:
                continue
            for j, a in rows[k].items():
                old = v.get(j)
                if old is None:
                    v[j] = -c * a
                    if j in rows:
                        heappush(heap, j)
                else:
                    new = old - c * a
                    if new:
                        v[j] = new
                    else:
                        del v[j]
            if t is not None:
                for j, a in self._tags[k].items():
                    new = t.get(j, 0) - c * a
                    if new:
                        t[j] = new
                    else:
                        t.pop(j, None)
        return v, t

    def normal_form(self, vec):
        return self.reduce(vec)[0]

    def contains(self, vec):
        return not self.reduce(vec)[0]

    def add(self, vec, tag=None):
        """Insert a vector; returns True iff the rank went up."""
        v, t = self.reduce(vec, tag)
        if not v:
            if self.track and t:
                self.relations.append(t)
            return False
        lead = min(v)
        inv = 1 / v[lead]
        self._rows[lead] = {k: c * inv for k, c in v.items() if k != lead}
        if self.track:
            self._tags[lead] = {k: c * inv for k, c in t.items()}
        return True
