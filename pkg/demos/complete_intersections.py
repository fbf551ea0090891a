"""Complete intersections through the bigraded Jacobian ring.

Run:  python3 demos/complete_intersections.py

A cubic and a quartic in P^5 cut out a threefold with d(X) = 3 + 4 - 6 = 1.
Its primitive Hodge numbers are the quotient pieces at bidegrees (p, 1).
With one form the construction reduces to the ordinary Jacobian ring, which
the quintic checks.
"""
from ivhs.complete_intersections import CIProblem, check_ci, ci_hodge, effective_bound
from ivhs.errors import ModuliIdentificationUnavailable


def main():
    quintic = CIProblem(4, [5])
    print("quintic via the bigraded ring:", [ci_hodge(quintic, p) for p in range(4)])

    prob = CIProblem(5, [3, 4])
    print(f"\n{prob}: d(X) = {prob.dX}")
    print("primitive Hodge numbers:", [ci_hodge(prob, p) for p in range(prob.dim + 1)])
    cert = check_ci(prob)
    print(cert)
    for w in cert.warnings:
        print("  warning:", w)

    try:
        check_ci(CIProblem(6, [2, 2, 2]))
    except ModuliIdentificationUnavailable as exc:
        print(f"\nthree quadrics in P^6: {exc.reason} ({exc})")

    print("\ndegree bound for hypersurfaces in P^4:", effective_bound(4, 1))


if __name__ == "__main__":
    main()
