"""Graded polynomial rings and their quotients by homogeneous ideals.

A *graded ring* here is any object with

* ``nvars`` -- number of variables,
* ``degree(exponents)`` -- the degree of a monomial (a value supporting
  ``+`` and ``-`` and hashing),
* ``monomials(degree)`` -- every exponent vector of that degree, in the
  fixed graded-lex order (larger total degree first, then lex descending).

:class:`QuotientRing` computes graded pieces of ``ring / (generators)`` one
degree at a time.  The ideal piece is the span of all products
``u * g`` with ``u`` a monomial and ``g`` a generator, echelonized with a
:class:`~ivhs.sparse.SparseEchelon` over monomial indices.  Monomials that
are not pivots form the standard basis of the quotient piece, and the
residual of full reduction is the normal form in that basis.
"""
from fractions import Fraction

from .errors import InputError
from .sparse import SparseEchelon

__all__ = ["GradedPolynomial", "QuotientRing", "QuotientPiece", "graded_lex"]


def graded_lex(monomials):
    return sorted(monomials, key=lambda a: (sum(a), a), reverse=True)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class GradedPolynomial:
    """Homogeneous polynomial: exponent tuple -> nonzero Fraction.

    Parameters
    ----------
    ring : graded ring
    terms : mapping
        Exponent vector to coefficient; zero coefficients are dropped.
    degree : optional
        Expected degree; required for the zero polynomial.
    """

    __slots__ = ("ring", "terms", "degree", "_jacobian")

    def __init__(self, ring, terms, degree=None):
        clean = {}
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if len(e) != ring.nvars:
                raise InputError(f"exponent {e} has wrong length for {ring.nvars} variables")
            if any(x < 0 for x in e):
                raise InputError(f"negative exponent {e}")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}
        for e in self.terms:
            de = ring.degree(e)
            if degree is None:
                degree = de
            elif de != degree:
                raise InputError(f"polynomial is not homogeneous: {e} has degree {de}")
        if degree is None:
            raise InputError("the zero polynomial needs an explicit degree")
        self.ring = ring
        self.degree = degree
        self._jacobian = None

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return (isinstance(other, GradedPolynomial) and self.ring is other.ring
                and self.terms == other.terms and self.degree == other.degree)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def derivative(self, j, degree=None):
        out = {}
        for e, c in self.terms.items():
            if e[j]:
                f = list(e)
                f[j] -= 1
                out[tuple(f)] = c * e[j]
        return GradedPolynomial(self.ring, out, degree)

    def scale(self, k):
        return GradedPolynomial(self.ring, {e: c * k for e, c in self.terms.items()}, self.degree)

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return GradedPolynomial(self.ring, terms, self.degree)

    def times_monomial(self, u, coefficient=1):
        return GradedPolynomial(self.ring, {_add(e, u): c * coefficient for e, c in self.terms.items()})

    def __repr__(self):
        shown = list(self.terms.items())[:4]
        body = " + ".join(f"{c}*{list(e)}" for e, c in shown)
        more = " + ..." if len(self.terms) > 4 else ""
        return f"GradedPolynomial(deg={self.degree}, {body}{more})"


class QuotientPiece:
    """One graded piece ``S_d / I_d`` with its standard monomial basis."""

    def __init__(self, quotient, degree):
        ring = quotient.ring
        self.degree = degree
        # pivots are leading terms; eliminating the graded-lex smallest monomials
        # first keeps fill-in far lower on Jacobian ideals
        self.monomials = ring.monomials(degree)[::-1]
        self.index = {m: i for i, m in enumerate(self.monomials)}
        full = len(self.monomials)
        ech = SparseEchelon()
        for g in quotient.generators:
            if ech.rank == full:
                break
            for u in ring.monomials(degree - g.degree):
                ech.add({self.index[_add(u, e)]: c for e, c in g.terms.items()})
                if ech.rank == full:
                    break
        self.echelon = ech
        self.standard = [i for i in range(full) if not ech.is_pivot(i)]
        self.position = {i: k for k, i in enumerate(self.standard)}
        self.standard_monomials = [self.monomials[i] for i in self.standard]
        self._nf_cache = {}

    @property
    def ambient_dim(self):
        return len(self.monomials)

    @property
    def ideal_dim(self):
        return self.echelon.rank

    @property
    def dim(self):
        return len(self.standard)

    def _to_positions(self, residual):
        return {self.position[k]: c for k, c in residual.items()}

    def normal_form_monomial(self, mono):
        """Coordinates of a monomial of this degree in the standard basis."""
        out = self._nf_cache.get(mono)
        if out is None:
            i = self.index[mono]
            if i in self.position:
                out = {self.position[i]: Fraction(1)}
            else:
                out = self._to_positions(self.echelon.normal_form({i: 1}))
            self._nf_cache[mono] = out
        return out

    def normal_form(self, terms):
        """Coordinates of a polynomial (exponent -> coefficient) of this degree."""
        vec = {}
        for e, c in terms.items():
            i = self.index[e]
            vec[i] = vec.get(i, 0) + Fraction(c)
        return self._to_positions(self.echelon.normal_form(vec))

    def contains(self, terms):
        """Ideal membership of a polynomial of this degree."""
        return not self.normal_form(terms)


class QuotientRing:
    """Graded quotient of a polynomial ring by homogeneous generators."""

    def __init__(self, ring, generators):
        self.ring = ring
        # sparse generators first: their multiples echelonize with little fill-in
        self.generators = sorted((g for g in generators if not g.is_zero()), key=len)
        self._pieces = {}

    def piece(self, degree):
        p = self._pieces.get(degree)
        if p is None:
            p = QuotientPiece(self, degree)
            self._pieces[degree] = p
        return p

    def dim(self, degree):
        return self.piece(degree).dim

    def ideal_dim(self, degree):
        return self.piece(degree).ideal_dim

    def _product(self, target, vec, source_monos, mono):
        out = {}
        for i, c in vec.items():
            for k, a in target.normal_form_monomial(_add(source_monos[i], mono)).items():
                v = out.get(k, 0) + c * a
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def multiplication_kernel(self, e, c):
        """Kernel of ``R_e -> Hom(R_c, R_{e+c})`` as vectors in the standard basis of R_e.

        The kernel is the intersection over standard monomials ``w`` of R_c
        of the kernels of multiplication by ``w``; intersection stops as
        soon as it is zero.
        """
        pe, pc, pt = self.piece(e), self.piece(c), self.piece(e + c)
        src = pe.standard_monomials
        kernel = [{i: Fraction(1)} for i in range(pe.dim)]
        if not kernel:
            return []
        if pc.dim == 0:
            return kernel
        for w in pc.standard_monomials:
            ech = SparseEchelon(track=True)
            for k, vec in enumerate(kernel):
                ech.add(self._product(pt, vec, src, w), {k: 1})
            new = []
            for rel in ech.relations:
                acc = {}
                for k, a in rel.items():
                    for i, b in kernel[k].items():
                        v = acc.get(i, 0) + a * b
                        if v:
                            acc[i] = v
                        else:
                            acc.pop(i, None)
                new.append(acc)
            kernel = new
            if not kernel:
                break
        return kernel

    def pairing_rank(self, e, c, stop_at=None):
        """Rank of the image of ``R_e (x) R_c -> R_{e+c}``.

        Stops early once the rank reaches ``stop_at`` (default: the full
        dimension of the target piece).
        """
        pe, pc, pt = self.piece(e), self.piece(c), self.piece(e + c)
        limit = pt.dim if stop_at is None else min(stop_at, pt.dim)
        ech = SparseEchelon()
        if limit == 0:
            return 0
        # standard monomials of the target that factor through degree e and c
        # are images of a product of monomials, so they enter as unit vectors
        left = self.ring.monomials(e)
        for i in pt.standard:
            m = pt.monomials[i]
            if any(all(a <= b for a, b in zip(u, m)) for u in left):
                ech.add({pt.position[i]: 1})
                if ech.rank >= limit:
                    return ech.rank
        for w in pc.standard_monomials:
            for a in pe.standard_monomials:
                v = pt.normal_form_monomial(_add(a, w))
                if v and ech.add(v) and ech.rank >= limit:
                    return ech.rank
        return ech.rank

    def multiplication_rank(self, e, c):
        """``(rank, injective, surjective_onto)`` of ``R_e -> Hom(R_c, R_{e+c})``."""
        kernel = self.multiplication_kernel(e, c)
        de = self.dim(e)
        rk = de - len(kernel)
        target = self.dim(e + c)
        surj = self.pairing_rank(e, c) == target
        return rk, rk == de, surj
