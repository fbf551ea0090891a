from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivhs.errors import ComputationTooLarge, InputError
from ivhs.jacobian import cox_ring, fermat_section, jacobian_ring, random_section
from ivhs.linalg import RationalMatrix, rank
from ivhs.symmetrizers import (CompositionProblem, SymmetrizerFailure, generic_threshold,
                               is_symmetrizer, multiplication_problem,
                               multiplication_symmetrizer, random_problem,
                               randomized_triviality_report, solution_rank, symmetrizer_space)
from ivhs.toric import projective_space_fan


def test_threshold_examples():
    assert generic_threshold(2, 5) == 9
    assert generic_threshold(1, 101) == 303
    assert generic_threshold(1, 1) == 3
    assert generic_threshold(3, 7) == 9


@given(st.integers(1, 3), st.integers(1, 4), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_one_dimensional_e0_has_full_symmetrizer(g0, g1, g2, seed):
    p = random_problem(g0, g1, g2, 1, seed)
    assert symmetrizer_space(p).dim == g1 * g2


@settings(max_examples=25)
@given(st.integers(1, 3), st.integers(1, 4), st.integers(1, 3), st.integers(1, 6),
       st.integers(0, 10 ** 6))
def test_basis_elements_are_symmetrizers(g0, g1, g2, d, seed):
    d = min(d, g0 * g1)
    space = symmetrizer_space(random_problem(g0, g1, g2, d, seed))
    basis = space.basis()
    assert len(basis) == space.dim
    for q in basis:
        assert is_symmetrizer(space.problem, q)
    if basis:
        assert solution_rank(basis, (g2, g1)) == space.dim
    # rank-nullity for the one-row system
    assert space.system_rank + len(space.row_kernel) == d * g1


@settings(max_examples=15)
@given(st.integers(1, 3), st.integers(2, 4), st.integers(1, 2), st.integers(2, 5),
       st.integers(0, 10 ** 6), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_linear_combinations_stay_in_space(g0, g1, g2, d, seed, weights):
    d = min(d, g0 * g1)
    space = symmetrizer_space(random_problem(g0, g1, g2, d, seed))
    basis = space.basis()[:4]
    if not basis:
        return
    combo = []
    for j in range(d):
        acc = [[Fraction(0)] * g1 for _ in range(g2)]
        for w, q in zip(weights, basis):
            m = q[j].tolist()
            for r in range(g2):
                for c in range(g1):
                    acc[r][c] += w * m[r][c]
        combo.append(acc)
    assert is_symmetrizer(space.problem, combo)


@settings(max_examples=15)
@given(st.integers(1, 3), st.integers(2, 4), st.integers(1, 2), st.integers(2, 5),
       st.integers(0, 10 ** 6))
def test_change_of_basis_keeps_dimension(g0, g1, g2, d, seed):
    d = min(d, g0 * g1)
    p = random_problem(g0, g1, g2, d, seed)
    rng = np.random.default_rng(seed)
    while True:
        change = rng.integers(-3, 4, size=(d, d)).tolist()
        if rank(change) == d:
            break
    mats = [a.tolist() for a in p.basis]
    new = [[[sum(change[i][k] * mats[k][r][c] for k in range(d)) for c in range(g0)]
            for r in range(g1)] for i in range(d)]
    q = CompositionProblem(g0, g1, g2, new)
    assert symmetrizer_space(q).dim == symmetrizer_space(p).dim


def test_perturbed_solution_is_rejected():
    space = symmetrizer_space(random_problem(2, 3, 2, 2, 5))
    q = [m.tolist() for m in space.basis()[0]]
    q[1][0][0] += 1
    assert not is_symmetrizer(space.problem, q)


@pytest.mark.parametrize("args", [(2, 5, 3, 9), (3, 7, 4, 9)])
def test_generic_triviality_above_threshold(args):
    report = randomized_triviality_report(*args, trials=20, seed=0, strict=True)
    assert (report.trials, report.failures) == (20, 0)


def test_report_is_seeded():
    a = randomized_triviality_report(2, 5, 3, 9, trials=3, seed=4)
    b = randomized_triviality_report(2, 5, 3, 9, trials=3, seed=4)
    assert a.to_dict() == b.to_dict() and a.trial_seeds == b.trial_seeds


def test_report_parameter_checks():
    with pytest.raises(InputError):
        randomized_triviality_report(1, 5, 3, 15, trials=1)
    with pytest.raises(InputError):
        randomized_triviality_report(2, 5, 3, 8, trials=1)
    with pytest.raises(InputError):
        randomized_triviality_report(2, 2, 3, 5, trials=1, enforce_threshold=False)
    # below the threshold the report is produced without expectations
    below = randomized_triviality_report(2, 5, 3, 4, trials=3, enforce_threshold=False)
    assert below.trials == 3
    with pytest.raises(SymmetrizerFailure):
        randomized_triviality_report(2, 5, 3, 1, trials=1, enforce_threshold=False, strict=True)


def test_problem_validation():
    with pytest.raises(InputError):
        CompositionProblem(1, 2, 1, [[[1], [0]], [[2], [0]]])  # dependent
    with pytest.raises(InputError):
        CompositionProblem(1, 2, 1, [[[1, 0]]])  # wrong shape
    with pytest.raises(InputError):
        CompositionProblem(1, 1, 1, [[[1]], [[2]]])  # d > g0 g1


def test_size_guard():
    p = CompositionProblem(1, 101, 2000, [[[int(i == j)] for i in range(101)] for j in range(2)],
                           check=False)
    with pytest.raises(ComputationTooLarge):
        symmetrizer_space(p)


def test_multiplication_symmetrizer_small_ring():
    # random cubic on P^4: E0 = R_1 acting R_0 -> R_1, G2 = R_2
    fan = projective_space_fan(4)
    ring = cox_ring(fan)
    q = jacobian_ring(random_section(fan, 3, seed=2))
    e, base = ring.chow.parse(1), ring.zero_degree()
    p = multiplication_problem(q, e, base)
    space = symmetrizer_space(p)
    mult = multiplication_symmetrizer(q, e, base)
    assert is_symmetrizer(p, mult)
    # the multiplication symmetrizer lies in the computed space
    assert solution_rank(space.basis() + [mult], (p.g2, p.g1)) == space.dim


def test_quintic_multiplication_is_symmetrizer():
    fan = projective_space_fan(4)
    ring = cox_ring(fan)
    q = jacobian_ring(fermat_section(fan, 5))
    p = multiplication_problem(q, ring.chow.parse(5), ring.zero_degree())
    assert (p.g0, p.g1, p.g2, p.d) == (1, 101, 101, 101)
    assert p.unknowns > 200_000
    with pytest.raises(ComputationTooLarge):
        symmetrizer_space(p)
    assert is_symmetrizer(p, multiplication_symmetrizer(q, ring.chow.parse(5), ring.zero_degree()))
