"""Hypersurfaces in P^4: where the certificate starts to apply.

Run:  python3 demos/p4_threefolds.py

For degree t the Hodge numbers come from lattice points of t times the
standard simplex and the moduli count from the Jacobian ring of a random
section.  The quintic (t = 5) has one holomorphic 3-form and 101 moduli, so
the inequality mu >= 3 (floor((h_next - 1) / h_top) + 1) needs 303 and fails.
From t = 6 on h_top grows like t^4 while the right-hand side shrinks.
"""
from ivhs.nongenericity import scan
from ivhs.polytope import LatticePolytope
from ivhs.toric import divisor_polytope, projective_space_fan


def main():
    fan = projective_space_fan(4)
    hyperplane = [1, 0, 0, 0, 0]

    delta = divisor_polytope(fan, hyperplane)
    print("divisor polytope of a hyperplane:", delta)
    print("Ehrhart polynomial:", delta.ehrhart_polynomial())
    assert delta.ehrhart_polynomial() == LatticePolytope.simplex(4).ehrhart_polynomial()

    certs, first = scan(fan, hyperplane, range(5, 9))
    print()
    print(" t  h_top  h_next   mu  rhs  verdict")
    for t, c in certs:
        rhs = "-" if c.rhs is None else c.rhs
        print(f"{t:2d}  {c.h_top:5d}  {c.h_next:6d}  {c.mu:3d}  {rhs:>3}  {c.verdict}")
    print(f"\nfirst degree with a NonGeneric verdict: {first}")

    print("\nfull certificate for the sextic:")
    print(dict(certs[1][1].to_dict()))


if __name__ == "__main__":
    main()
