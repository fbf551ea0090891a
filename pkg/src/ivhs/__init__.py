"""Exact Hodge numbers, moduli counts and non-genericity certificates.

Modules, bottom-up: ``linalg``, ``sparse`` and ``intmat`` (exact linear
algebra), ``polytope`` (lattice points and Ehrhart polynomials), ``toric``
(fans, Chow groups, divisors), ``rings`` and ``jacobian`` (graded quotient
rings), ``hodge``, ``symmetrizers``, ``nongenericity``,
``complete_intersections`` and ``cli``.
"""

__version__ = "0.1.0"
