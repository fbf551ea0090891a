"""Dense exact linear algebra over the rationals.

Everything here works with :class:`fractions.Fraction` and Python integers;
there is no floating point anywhere.  Ranks and kernels are computed by
fraction-free (Bareiss) elimination on an integer copy of the matrix, which
keeps intermediate entries bounded by minors of the input.
"""
from fractions import Fraction
from math import lcm

__all__ = [
    "RationalMatrix",
    "RationalPolynomial",
    "InconsistentSystem",
    "rank",
    "kernel_basis",
    "solve",
    "interpolate_polynomial",
]


class InconsistentSystem(ValueError):
    pass


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    # numpy integers and anything else exposing __index__
    return Fraction(int(x))


class RationalMatrix:
    """Immutable dense matrix of exact rationals.

    Entries are stored row-major as Fractions, so every entry is in lowest
    terms with a positive denominator.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, cols=None):
        data = [list(r) for r in data]
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = len(data)
        self.cols = cols
        self._data = tuple(tuple(_frac(x) for x in r) for r in data)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i):
        return self._data[i]

    def tolist(self):
        return [list(r) for r in self._data]

    def transpose(self):
        return RationalMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            ocols = [other.column(j) for j in range(other.cols)]
            return RationalMatrix(
                [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in ocols]
                 for r in self._data],
                other.cols,
            )
        vec = [_frac(x) for x in other]
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((a * b for a, b in zip(r, vec)), Fraction(0)) for r in self._data]

    def column(self, j):
        return tuple(r[j] for r in self._data)

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and self.shape == other.shape
                and self._data == other._data)

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"RationalMatrix([{body}])"

    def integer_rows(self):
        """Rows scaled by the lcm of their denominators (same row space)."""
        out = []
        for r in self._data:
            den = lcm(*(x.denominator for x in r)) if r else 1
            out.append([x.numerator * (den // x.denominator) for x in r])
        return out


def _as_matrix(m):
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


def _bareiss_echelon(rows, ncols, pivoting="min"):
    """Fraction-free row echelon form of an integer matrix, in place.

    Returns the list of pivot columns.  ``pivoting="min"`` picks the
    candidate pivot of smallest magnitude, ``"first"`` the topmost one.
    """
    m = len(rows)
    prev = 1
    r = 0
    pivcols = []
    for c in range(ncols):
        if r == m:
            break
        cand = [i for i in range(r, m) if rows[i][c]]
        if not cand:
            continue
        if pivoting == "min":
            p = min(cand, key=lambda i: abs(rows[i][c]))
        elif pivoting == "first":
            p = cand[0]
        else:
            raise ValueError(f"unknown pivoting rule {pivoting!r}")
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        piv = prow[c]
        for i in range(r + 1, m):
            row = rows[i]
            a = row[c]
            if a:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - a * prow[j]) // prev
                row[c] = 0
            elif piv != prev:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (piv * row[j]) // prev
        prev = piv
        pivcols.append(c)
        r += 1
    return pivcols


def rank(m, pivoting="min"):
    """Exact rank over Q."""
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_bareiss_echelon(m.integer_rows(), m.cols, pivoting))


def _back_substitute(rows, pivcols, ncols, free_values, rhs=None):
    x = [Fraction(0)] * ncols
    for j, v in free_values.items():
        x[j] = Fraction(v)
    for k in range(len(pivcols) - 1, -1, -1):
        c = pivcols[k]
        row = rows[k]
        acc = Fraction(rhs[k]) if rhs is not None else Fraction(0)
        for j in range(c + 1, ncols):
            if row[j] and x[j]:
                acc -= row[j] * x[j]
        x[c] = acc / row[c]
    return x


def kernel_basis(m, pivoting="min"):
    """Basis of the right null space, one Fraction vector per free column."""
    m = _as_matrix(m)
    n = m.cols
    if m.rows == 0:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    rows = m.integer_rows()
    pivcols = _bareiss_echelon(rows, n, pivoting)
    pivset = set(pivcols)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        free = {j: 0 for j in range(n) if j not in pivset}
        free[f] = 1
        basis.append(_back_substitute(rows, pivcols, n, free))
    return basis


def solve(m, b):
    """One exact solution of ``m x = b``; raises InconsistentSystem if none."""
    m = _as_matrix(m)
    if len(b) != m.rows:
        raise ValueError("right-hand side has wrong length")
    aug = RationalMatrix([list(r) + [_frac(bi)] for r, bi in zip(m.tolist(), b)],
                         m.cols + 1)
    rows = aug.integer_rows()
    pivcols = _bareiss_echelon(rows, m.cols + 1, "min")
    if pivcols and pivcols[-1] == m.cols:
        raise InconsistentSystem("system has no solution")
    n = m.cols
    pivset = set(pivcols)
    rhs = [rows[k][n] for k in range(len(pivcols))]
    return _back_substitute(rows, pivcols, n, {j: 0 for j in range(n) if j not in pivset}, rhs)


class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        c = [_frac(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @property
    def degree(self):
        # the zero polynomial gets degree -1
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self):
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def coefficient(self, k):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial([c * _frac(other) for c in self.coefficients])
        out = [Fraction(0)] * max(len(self.coefficients) + len(other.coefficients) - 1, 0)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __repr__(self):
        return f"RationalPolynomial({[str(c) for c in self.coefficients]})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}" if c.denominator != 1 or c < 0 else f"{c}*{mono}")
            else:
                terms.append(f"({c})" if c < 0 else str(c))
        return " + ".join(terms)


def interpolate_polynomial(points):
    """The unique polynomial of degree < len(points) through integer-node points.

    Newton divided differences in exact arithmetic, expanded to the
    monomial basis.
    """
    pts = [(int(x), _frac(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be pairwise distinct")
    n = len(pts)
    coef = [y for _, y in pts]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Horner expansion of the Newton form
    poly = [Fraction(0)] * n
    poly_len = 0
    for i in range(n - 1, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        new = [Fraction(0)] * (poly_len + 1)
        for k in range(poly_len):
            new[k + 1] += poly[k]
            new[k] -= poly[k] * xs[i]
        new[0] += coef[i]
        poly_len += 1
        poly[:poly_len] = new
    return RationalPolynomial(poly[:poly_len])
