"""Symmetrizers: trivial for generic subspaces, large for geometric ones.

Run:  python3 demos/symmetrizers.py

A random 9-dimensional subspace of Hom(C^2, C^5) has no nonzero
symmetrizer, since 9 reaches the threshold 3 (floor(4 / 2) + 1).  The
subspace coming from the quintic's Jacobian ring is far from generic:
multiplication in the ring is commutative, so every map "multiply by alpha"
is a symmetrizer.  Composing with each of the 101 coordinate projections
of R_10 gives 101 independent ones.
"""
import time

from ivhs.jacobian import cox_ring, fermat_section, jacobian_ring
from ivhs.symmetrizers import (generic_threshold, is_symmetrizer, multiplication_problem,
                               projected_multiplication_symmetrizers,
                               randomized_triviality_report, solution_rank)
from ivhs.toric import projective_space_fan


def main():
    print("threshold for (g0, g1) = (2, 5):", generic_threshold(2, 5))
    report = randomized_triviality_report(2, 5, 3, 9, trials=20, seed=0)
    print("random subspaces above the threshold:", report)
    below = randomized_triviality_report(2, 5, 3, 4, trials=5, seed=0, enforce_threshold=False)
    print("below the threshold (no expectation):", below)

    fan = projective_space_fan(4)
    ring = cox_ring(fan)
    quotient = jacobian_ring(fermat_section(fan, 5))
    e, base = ring.chow.parse(5), ring.zero_degree()
    problem = multiplication_problem(quotient, e, base)
    print(f"\nquintic problem: {problem}, {problem.unknowns} unknowns (membership mode)")
    start = time.perf_counter()
    solutions = list(projected_multiplication_symmetrizers(quotient, e, base))
    ok = all(is_symmetrizer(problem, q) for q in solutions)
    rk = solution_rank(solutions, (problem.g2, problem.g1))
    print(f"{len(solutions)} projected multiplication maps are symmetrizers: {ok}; "
          f"rank {rk} ({time.perf_counter() - start:.1f} s)")


if __name__ == "__main__":
    main()
