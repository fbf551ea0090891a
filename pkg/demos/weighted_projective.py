"""Weighted projective space P(1,1,1,1,2).

Run:  python3 demos/weighted_projective.py

The lcm of the weights is m = 2, so a degree d is Cartier only when 2 | d.
Degree 8 is the first case where the certificate is NonGeneric.  There p0
injectivity follows from the weighted Macaulay condition, and the exact rank
computation is run as a cross-check.
"""
from ivhs.errors import NotCartier
from ivhs.jacobian import cox_ring
from ivhs.nongenericity import check_wps, weighted_macaulay_condition
from ivhs.toric import WeightSystem, wps_fan


def main():
    w = WeightSystem([1, 1, 1, 1, 2])
    fan = wps_fan(w)
    ring = cox_ring(fan)
    print(f"weights {list(w.weights)}: n = {w.n}, m = {w.m}, sum = {w.s}")
    for d in (2, 8):
        print(f"monomials of degree {d}: {len(ring.monomials(d))}")

    try:
        check_wps(w, 7)
    except NotCartier as exc:
        print(f"d = 7 rejected: {exc.reason} ({exc})")

    for d in (6, 8):
        cond = weighted_macaulay_condition(w, d, d - w.s, d)
        auto = check_wps(w, d)
        forced = check_wps(w, d, p0_method="rank")
        print(f"\nd = {d}: Macaulay condition {cond}")
        print(f"  h = ({auto.h_top}, {auto.h_next}), mu = {auto.mu}, rhs = {auto.rhs}")
        print(f"  p0 via {auto.p0_method}: {auto.p0_injective}; via rank: {forced.p0_injective}")
        print(f"  verdict: {auto.verdict}")


if __name__ == "__main__":
    main()
