"""Symmetrizer spaces of composition maps.

For ``E0 ⊂ Hom(G0, G1)`` with basis ``A_1..A_d`` (``g1 x g0`` matrices) the
composition map ``E0 x Hom(G1, G2) -> Hom(G0, G2)`` has symmetrizer space

    Symm = { q : E0 -> Hom(G1, G2) linear  |  q(A_j) A_i = q(A_i) A_j  for all i < j }.

A symmetrizer is stored as the list ``[q(A_1), ..., q(A_d)]`` of ``g2 x g1``
matrices.  The defining equations act on each row of those matrices
separately, so the kernel is computed once for a single row (``d g1``
unknowns) and ``dim Symm`` is ``g2`` times its dimension.

When ``d`` is at least ``3 (floor((g1 - 1) / g0) + 1)`` and ``g0 > 1`` the
symmetrizer space of a generic ``E0`` is zero.  :func:`randomized_triviality_report`
checks this on random integer subspaces.
"""
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import ComputationTooLarge, InputError
from .linalg import RationalMatrix, kernel_basis, rank

__all__ = [
    "CompositionProblem",
    "SymmetrizerSpace",
    "TrivialityReport",
    "symmetrizer_space",
    "is_symmetrizer",
    "generic_threshold",
    "randomized_triviality_report",
    "multiplication_problem",
    "multiplication_symmetrizer",
    "projected_multiplication_symmetrizers",
    "solution_rank",
    "random_problem",
    "SymmetrizerFailure",
    "MAX_UNKNOWNS",
]

# refuse full kernel computations with more unknowns than this
MAX_UNKNOWNS = 200_000


def _matrix(m, shape, what):
    if not isinstance(m, RationalMatrix):
        try:
            m = RationalMatrix(m, shape[1])
        except ValueError:
            raise InputError(f"{what} is not a {shape[0]} x {shape[1]} matrix") from None
    if m.shape != shape:
        raise InputError(f"{what} has shape {m.shape}, expected {shape}")
    return m


class CompositionProblem:
    """A subspace ``E0 ⊂ Hom(G0, G1)`` and a target space ``G2``.

    Parameters
    ----------
    g0, g1, g2 : int
        Dimensions of ``G0``, ``G1`` and ``G2``.
    e0_basis : sequence of matrices
        ``d`` linearly independent ``g1 x g0`` matrices spanning ``E0``.
    check : bool
        Verify linear independence (an exact rank computation).
    """

    def __init__(self, g0, g1, g2, e0_basis, check=True):
        if min(g0, g1, g2) < 1:
            raise InputError("g0, g1, g2 must be positive")
        self.g0, self.g1, self.g2 = int(g0), int(g1), int(g2)
        self.basis = [_matrix(a, (self.g1, self.g0), "E0 basis matrix") for a in e0_basis]
        if not self.basis:
            raise InputError("E0 basis is empty")
        if self.d > self.g0 * self.g1:
            raise InputError(f"d = {self.d} exceeds g0 * g1 = {self.g0 * self.g1}")
        if check:
            flat = RationalMatrix([[x for row in a.tolist() for x in row] for a in self.basis])
            if rank(flat) != self.d:
                raise InputError("E0 basis matrices are linearly dependent")

    @property
    def d(self):
        return len(self.basis)

    @property
    def unknowns(self):
        return self.d * self.g1 * self.g2

    def __repr__(self):
        return f"CompositionProblem(g0={self.g0}, g1={self.g1}, g2={self.g2}, d={self.d})"

    def row_system(self):
        """Equations on one row ``x_1..x_d`` (each of length ``g1``) of the maps ``q(A_j)``.

        Unknown ``x_j[k]`` sits in column ``j g1 + k``; pair ``(i, j)`` with
        ``i < j`` contributes the ``g0`` equations ``x_j A_i - x_i A_j = 0``.
        """
        g0, g1, d = self.g0, self.g1, self.d
        cols = [a.tolist() for a in self.basis]
        rows = []
        for i in range(d):
            for j in range(i + 1, d):
                for col in range(g0):
                    eq = [Fraction(0)] * (d * g1)
                    for k in range(g1):
                        eq[j * g1 + k] += cols[i][k][col]
                        eq[i * g1 + k] -= cols[j][k][col]
                    rows.append(eq)
        return RationalMatrix(rows, d * g1)


class SymmetrizerSpace:
    """Dimension and basis of a symmetrizer space.

    ``row_kernel`` is the kernel of :meth:`CompositionProblem.row_system`;
    :meth:`basis` expands it to full symmetrizers.
    """

    def __init__(self, problem, row_kernel, system_rank):
        self.problem = problem
        self.row_kernel = row_kernel
        self.system_rank = system_rank

    @property
    def dim(self):
        return self.problem.g2 * len(self.row_kernel)

    def __len__(self):
        return self.dim

    def basis(self):
        """Every basis symmetrizer as a list of ``d`` matrices of shape ``g2 x g1``."""
        p = self.problem
        out = []
        for r in range(p.g2):
            for v in self.row_kernel:
                q = []
                for j in range(p.d):
                    m = [[Fraction(0)] * p.g1 for _ in range(p.g2)]
                    m[r] = list(v[j * p.g1:(j + 1) * p.g1])
                    q.append(RationalMatrix(m, p.g1))
                out.append(q)
        return out

    def __repr__(self):
        return f"SymmetrizerSpace(dim={self.dim})"


def symmetrizer_space(problem):
    """Exact symmetrizer space of a composition problem.

    Raises
    ------
    ComputationTooLarge
        The problem has more than ``MAX_UNKNOWNS`` unknowns; use
        :func:`is_symmetrizer` to test known solutions instead.
    """
    if problem.unknowns > MAX_UNKNOWNS:
        raise ComputationTooLarge(
            f"{problem.unknowns} unknowns exceed {MAX_UNKNOWNS}; use membership mode")
    system = problem.row_system()
    kernel = kernel_basis(system)
    return SymmetrizerSpace(problem, kernel, problem.d * problem.g1 - len(kernel))


def _integer_stack(q, shape):
    """Exact integer array ``(d, *shape)`` proportional to a family of rational matrices.

    Integer numpy arrays pass through untouched; anything else is scaled by
    the common denominator of its entries (the equations are homogeneous).
    """
    if isinstance(q, np.ndarray) and np.issubdtype(q.dtype, np.integer):
        arr = q
    else:
        mats = [m.tolist() if isinstance(m, RationalMatrix) else m for m in q]
        arr = np.array([[[Fraction(x) for x in row] for row in m] for m in mats], dtype=object)
        arr = arr.reshape((len(mats),) + shape)
        den = lcm(1, *(x.denominator for x in arr.flat))
        arr = np.array([int(x * den) for x in arr.flat], dtype=object).reshape(arr.shape)
    if arr.shape != (arr.shape[0],) + shape:
        raise InputError(f"matrices have shape {arr.shape[1:]}, expected {shape}")
    return arr


def _fits_int64(a, b, inner):
    bound = max((abs(int(x)) for x in a.flat), default=0) * \
        max((abs(int(x)) for x in b.flat), default=0) * max(inner, 1)
    return 2 * bound < 2 ** 63


def is_symmetrizer(problem, q):
    """Exact membership test for ``q = [q(A_1), ..., q(A_d)]``.

    ``q`` is a sequence of ``d`` matrices of shape ``g2 x g1`` or an integer
    array of shape ``(d, g2, g1)``.
    """
    p = problem
    if len(q) != p.d:
        raise InputError(f"need {p.d} matrices, got {len(q)}")
    Q = _integer_stack(q, (p.g2, p.g1))
    A = _integer_stack(p.basis, (p.g1, p.g0))
    live = np.flatnonzero(np.any(Q != 0, axis=(0, 2)))
    if not len(live):
        return True
    Q = Q[:, live, :]
    # block (j, i) of Q_j [A_1 ... A_d] is Q_j A_i
    A_all = np.concatenate(list(A), axis=1)
    if _fits_int64(Q, A_all, p.g1):
        Q, A_all = Q.astype(np.int64), A_all.astype(np.int64)
    g0 = p.g0
    products = [Q[j] @ A_all for j in range(p.d)]
    for i in range(p.d):
        for j in range(i + 1, p.d):
            left = products[j][:, i * g0:(i + 1) * g0]
            right = products[i][:, j * g0:(j + 1) * g0]
            if not np.array_equal(left, right):
                return False
    return True


def generic_threshold(g0, g1):
    """Smallest ``d`` with generically trivial symmetrizers: ``3 (floor((g1 - 1) / g0) + 1)``."""
    if g0 < 1 or g1 < 1:
        raise InputError("g0 and g1 must be positive")
    return 3 * ((g1 - 1) // g0 + 1)


class TrivialityReport:
    """Outcome of :func:`randomized_triviality_report`."""

    def __init__(self, g0, g1, g2, d, seed, trial_seeds, dims):
        self.g0, self.g1, self.g2, self.d = g0, g1, g2, d
        self.seed = seed
        self.trial_seeds = list(trial_seeds)
        self.dims = list(dims)

    @property
    def trials(self):
        return len(self.dims)

    @property
    def failures(self):
        return sum(1 for x in self.dims if x)

    @property
    def failing_seeds(self):
        return [s for s, x in zip(self.trial_seeds, self.dims) if x]

    def to_dict(self):
        return {"g0": self.g0, "g1": self.g1, "g2": self.g2, "d": self.d, "seed": self.seed,
                "trials": self.trials, "failures": self.failures,
                "failing_seeds": self.failing_seeds}

    def __repr__(self):
        return (f"TrivialityReport(({self.g0},{self.g1},{self.g2},{self.d}), "
                f"trials={self.trials}, failures={self.failures})")


class SymmetrizerFailure(AssertionError):
    """A random subspace above the threshold had a nonzero symmetrizer."""


def random_problem(g0, g1, g2, d, seed, bound=10):
    """Random ``E0`` with integer entries in ``[-bound, bound]`` (redrawn until independent)."""
    rng = np.random.default_rng(seed)
    while True:
        mats = rng.integers(-bound, bound + 1, size=(d, g1, g0))
        try:
            return CompositionProblem(g0, g1, g2, [m.tolist() for m in mats])
        except InputError:
            continue


def randomized_triviality_report(g0, g1, g2, d, trials, seed=0, enforce_threshold=True,
                                 strict=False):
    """Count random ``E0`` of dimension ``d`` whose symmetrizer space is nonzero.

    Parameters
    ----------
    enforce_threshold : bool
        Reject ``d`` below :func:`generic_threshold`.  With ``False`` the report
        is produced but carries no expectation.
    strict : bool
        Raise :class:`SymmetrizerFailure` naming the trial seed on the first failure.
    """
    from .nongenericity import _run

    if g0 <= 1:
        raise InputError("generic triviality needs g0 > 1")
    if d > g0 * g1:
        raise InputError(f"d = {d} exceeds g0 * g1 = {g0 * g1}")
    if enforce_threshold and d < generic_threshold(g0, g1):
        raise InputError(f"d = {d} is below the threshold {generic_threshold(g0, g1)}")
    if trials < 0:
        raise InputError("trials must be nonnegative")
    children = np.random.SeedSequence(seed).spawn(trials)
    trial_seeds = [int(c.generate_state(1)[0]) for c in children]

    def trial(s):
        return lambda: symmetrizer_space(random_problem(g0, g1, g2, d, s)).dim

    dims = _run([trial(s) for s in trial_seeds])
    report = TrivialityReport(g0, g1, g2, d, seed, trial_seeds, dims)
    if strict and report.failures:
        raise SymmetrizerFailure(
            f"nonzero symmetrizer for ({g0},{g1},{g2},{d}) at trial seed {report.failing_seeds[0]}")
    return report


# -- ring multiplication problems ------------------------------------------------


def _multiplication_matrix(quotient, alpha, source, target):
    """Matrix of ``. alpha : R_source -> R_target`` in standard monomial bases."""
    ps, pt = quotient.piece(source), quotient.piece(target)
    m = np.full((pt.dim, ps.dim), Fraction(0), dtype=object)
    for col, mono in enumerate(ps.standard_monomials):
        prod = tuple(a + b for a, b in zip(mono, alpha))
        for row, c in pt.normal_form_monomial(prod).items():
            m[row, col] = c
    return m


def multiplication_problem(quotient, e, base):
    """``E0`` = multiplication by ``R_e`` as maps ``R_base -> R_{base+e}``, ``G2 = R_{base+2e}``.

    The basis of ``E0`` is the standard monomial basis of ``R_e``; it must act
    injectively for the problem to be well formed.
    """
    mid, top = base + e, base + e + e
    g0, g1, g2 = quotient.dim(base), quotient.dim(mid), quotient.dim(top)
    basis = [_multiplication_matrix(quotient, a, base, mid).tolist()
             for a in quotient.piece(e).standard_monomials]
    return CompositionProblem(g0, g1, g2, basis)


def multiplication_symmetrizer(quotient, e, base):
    """``q(alpha) = . alpha : R_{base+e} -> R_{base+2e}``, a symmetrizer by commutativity.

    Returned as an exact integer array of shape ``(d, g2, g1)``, scaled by a
    common denominator if the normal forms are not integral.
    """
    mid, top = base + e, base + e + e
    mats = [_multiplication_matrix(quotient, a, mid, top)
            for a in quotient.piece(e).standard_monomials]
    shape = (quotient.dim(top), quotient.dim(mid))
    q = _integer_stack(mats, shape)
    if _fits_int64(q, np.ones(1, dtype=object), 1):
        q = q.astype(np.int64)
    return q


def projected_multiplication_symmetrizers(quotient, e, base):
    """Yield ``pi_k o q`` for each coordinate projection ``pi_k`` of ``R_{base+2e}``.

    Each is again a symmetrizer; they are linearly independent whenever every
    row of the multiplication maps is nonzero.
    """
    q = multiplication_symmetrizer(quotient, e, base)
    for k in range(q.shape[1]):
        out = np.zeros_like(q)
        out[:, k, :] = q[:, k, :]
        yield out


def solution_rank(solutions, shape):
    """Exact rank of a family of symmetrizers with matrices of ``shape``, flattened."""
    from .sparse import SparseEchelon

    ech = SparseEchelon()
    for q in solutions:
        flat = _integer_stack(q, shape).reshape(-1)
        ech.add({int(i): int(flat[i]) for i in np.flatnonzero(flat)})
    return ech.rank
