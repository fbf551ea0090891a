"""Integer matrices: Smith and Hermite normal forms, integer kernels.

Matrices are lists of lists of Python ints.  The Smith form comes with its
unimodular transforms, which the Chow group presentation needs to map
exponent vectors to degree classes.
"""

__all__ = [
    "smith_normal_form",
    "hermite_normal_form",
    "integer_kernel",
    "invariant_factors",
    "solve_integer",
]


def _copy(a):
    return [list(map(int, r)) for r in a]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a):
    """Smith normal form with transforms.

    Returns ``(U, S, V)`` with ``U @ a @ V == S``, U and V unimodular, S
    diagonal with nonnegative entries and ``S[i][i] | S[i+1][i+1]``.
    """
    s = _copy(a)
    m = len(s)
    n = len(s[0]) if m else 0
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row dst += k * row src
        s[dst] = [x + k * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in s:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = s[t][t]
            done = True
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // p))
                    if s[i][t]:
                        done = False
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // p))
                    if s[t][j]:
                        done = False
            if not done:
                continue
            # pivot now isolated; enforce divisibility of the rest
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if s[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if not any(s[i][j] for i in range(t, m) for j in range(t, n)):
            break
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return u, s, v


def invariant_factors(a):
    """Nonzero diagonal entries of the Smith form."""
    _, s, _ = smith_normal_form(a)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i]]


def hermite_normal_form(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Nonzero rows only; pivots positive and strictly increasing in column,
    entries above each pivot reduced into ``[0, pivot)``.
    """
    h = [r for r in _copy(rows) if any(r)]
    if not h:
        return []
    ncols = len(h[0])
    out = []
    col = 0
    while h and col < ncols:
        nz = [r for r in h if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in h if not r[col]]
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            new = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col]:
                    new.append(r)
                elif any(r):
                    rest.append(r)
            nz = new
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for i, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[i] = [x - q * y for x, y in zip(r, piv)]
        out.append(piv)
        h = rest
        col += 1
    return out


def integer_kernel(a, ncols=None):
    """Basis of the lattice ``{x in Z^n : a x = 0}``, in row Hermite form.

    The basis is saturated: it spans every integer solution, not just a
    finite-index sublattice.
    """
    a = _copy(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    if not a:
        return _identity(n)
    # column reduction a @ V = H tracked by V; zero columns of H give the kernel
    at = [list(col) for col in zip(*a)]  # n rows, each a column of a
    aug = [at[j] + _identity(n)[j] for j in range(n)]
    m = len(a)
    rows = aug
    r = 0
    for c in range(m):
        while True:
            nz = [i for i in range(r, n) if rows[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(rows[i][c]))
            rows[r], rows[p] = rows[p], rows[r]
            clean = True
            for i in range(r + 1, n):
                if rows[i][c]:
                    q = rows[i][c] // rows[r][c]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        clean = False
            if clean:
                r += 1
                break
    kernel = [row[m:] for row in rows[r:]]
    return hermite_normal_form(kernel)


def solve_integer(a, b):
    """One integer solution of ``a x = b``, or None if there is none."""
    u, s, v = smith_normal_form(a)
    m = len(a)
    n = len(a[0]) if m else 0
    ub = [sum(x * y for x, y in zip(row, b)) for row in u]
    z = [0] * n
    for i in range(m):
        d = s[i][i] if i < n else 0
        if d == 0:
            if ub[i]:
                return None
        elif ub[i] % d:
            return None
        else:
            z[i] = ub[i] // d
    return [sum(v[i][j] * z[j] for j in range(n)) for i in range(n)]
