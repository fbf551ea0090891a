"""Non-genericity certificates for toric and weighted projective hypersurfaces.

A certificate records three predicates about the ring-side IVHS of a
hypersurface of degree ``e = t beta`` with ``beta_0`` the anticanonical
degree:

* ``p0_injective`` -- ``R_e -> Hom(R_{e - beta_0}, R_{2e - beta_0})`` is
  injective, so the IVHS has the same dimension as its first projection;
* ``inequality_holds`` -- ``mu >= 3 (floor((h_next - 1) / h_top) + 1)``;
* ``p1_nonzero`` -- the pairing ``R_e (x) R_{2e - beta_0} -> R_{3e - beta_0}``
  is not zero.

The verdict is ``NonGeneric`` exactly when all three hold, and
``Inconclusive`` otherwise.

Sections.  ``mu`` is always the minimum of ``dim R_e`` over three random
sections.  The two multiplication predicates are open conditions on the
section, so one section where they hold proves they hold generically.  With
``sections="auto"`` they are evaluated on a Fermat-type witness
``sum z_j^{k_j}`` when the degree admits one (its Jacobian ideal is
monomial, so exact ranks stay cheap at any size), and on a random section
otherwise.
"""
import json
import os
from concurrent.futures import ThreadPoolExecutor

from .errors import (CriterionInapplicable, DimensionTooSmall, InputError, NotAmple,
                     NotCartier)
from .hodge import guard_random, hypersurface_hodge, inequality_rhs, moduli_samples
from .jacobian import cox_ring, fermat_section, jacobian_ring, random_section
from .toric import (TorusDivisor, WeightSystem, beta0, is_ample_toric, is_ample_wps,
                    is_cartier, wps_fan)

__all__ = [
    "Certificate",
    "check_toric",
    "check_wps",
    "weighted_macaulay_condition",
    "scan",
    "evaluate_projections",
    "thread_count",
]

NON_GENERIC = "NonGeneric"
INCONCLUSIVE = "Inconclusive"


def thread_count():
    """Worker threads allowed by the ``IVHS_THREADS`` environment variable."""
    try:
        return max(1, int(os.environ.get("IVHS_THREADS", "1")))
    except ValueError:
        return 1


def _run(tasks):
    """Run zero-argument callables, possibly concurrently; results in order."""
    with ThreadPoolExecutor(max_workers=thread_count()) as ex:
        futures = [ex.submit(t) for t in tasks]
        return [f.result() for f in futures]


def _encode(value):
    # integers become decimal strings so arbitrary precision survives any consumer
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


class Certificate:
    """Verdict plus every quantity it was derived from."""

    FIELDS = ("instance", "h_top", "h_next", "mu", "rhs", "inequality_holds",
              "p0_injective", "p0_method", "p1_nonzero", "p1_method", "p1_surjective",
              "section", "verdict", "seeds", "warnings")
    INT_FIELDS = ("h_top", "h_next", "mu", "rhs")

    def __init__(self, instance, h_top, h_next, mu, rhs, inequality_holds, p0_injective,
                 p0_method, p1_nonzero, p1_surjective, section, seeds, warnings=(),
                 p1_method="rank", verdict=None):
        self.instance = instance
        self.h_top = h_top
        self.h_next = h_next
        self.mu = mu
        self.rhs = rhs
        self.inequality_holds = bool(inequality_holds)
        self.p0_injective = bool(p0_injective)
        self.p0_method = p0_method
        self.p1_nonzero = bool(p1_nonzero)
        self.p1_method = p1_method
        self.p1_surjective = p1_surjective
        self.section = section
        self.seeds = list(seeds)
        self.warnings = list(warnings)
        expected = (NON_GENERIC if self.inequality_holds and self.p0_injective and self.p1_nonzero
                    else INCONCLUSIVE)
        if verdict is not None and verdict != expected:
            raise InputError(f"verdict {verdict} contradicts the recorded predicates")
        self.verdict = expected

    def verify(self):
        """Independent re-check of the verdict equation and the inequality."""
        if self.rhs is not None and self.inequality_holds != (self.mu >= self.rhs):
            return False
        both = self.inequality_holds and self.p0_injective and self.p1_nonzero
        return (self.verdict == NON_GENERIC) == both

    @property
    def non_generic(self):
        return self.verdict == NON_GENERIC

    def to_dict(self):
        return {f: getattr(self, f) for f in self.FIELDS}

    def to_json(self):
        return json.dumps(_encode(self.to_dict()), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        raw = json.loads(text)
        kw = dict(raw)
        for f in cls.INT_FIELDS:
            if kw[f] is not None:
                kw[f] = int(kw[f])
        kw["seeds"] = [int(s) for s in kw["seeds"]]
        cert = cls(**kw)
        cert.instance = raw["instance"]
        return cert

    def comparable(self, ignore=("instance",)):
        return {f: v for f, v in self.to_dict().items() if f not in ignore}

    def __eq__(self, other):
        return isinstance(other, Certificate) and self.to_json() == other.to_json()

    def __repr__(self):
        return (f"Certificate(h=({self.h_top},{self.h_next}), mu={self.mu}, rhs={self.rhs}, "
                f"verdict={self.verdict})")


def choose_section(fan, beta, policy, seed):
    """Section for the multiplication predicates and its description."""
    if policy not in ("auto", "fermat", "random"):
        raise InputError(f"unknown section policy {policy!r}")
    if policy in ("auto", "fermat"):
        f = fermat_section(fan, beta)
        if f is not None:
            return f, "fermat"
        if policy == "fermat":
            raise InputError(f"degree {beta} admits no Fermat-type section")
    return random_section(fan, beta, 10, seed), f"random(seed={seed})"


def evaluate_projections(quotient, e, c, *, random_coefficients=False, with_p0=True):
    """``(p0_injective, p1_nonzero, p1_surjective)`` on one quotient ring.

    ``e`` is the degree of the IVHS, ``c = e - beta_0`` the degree of the top
    Hodge piece, and ``e + c`` the degree of the next one.
    """
    mid = e + c
    top = e + mid
    if random_coefficients:
        for deg in (e, c, mid, top):
            guard_random(quotient, deg, "multiplication predicates")
    p0 = None
    if with_p0:
        p0 = not quotient.multiplication_kernel(e, c)
    nonzero = quotient.pairing_rank(e, mid, stop_at=1) > 0
    surjective = quotient.pairing_rank(e, mid) == quotient.dim(top)
    return p0, nonzero, surjective


def _seed_warnings(samples, seeds, what):
    if len(set(samples)) > 1:
        detail = ", ".join(f"seed {s}: {v}" for s, v in zip(seeds, samples))
        return [f"{what} disagrees across seeds ({detail}); using the generic minimum"]
    return []


def _hypersurface_certificate(fan, d, t, seed, sections, instance, macaulay=None):
    ring = cox_ring(fan)
    beta = ring.degree(d.coefficients)
    e = beta * t
    c = e - beta0(fan)
    seeds = [seed, seed + 1, seed + 2]
    section, label = choose_section(fan, e, sections, seed)
    witness = jacobian_ring(section)
    randomized = label != "fermat"

    (h_top, h_next), samples, (p0, p1, p1_surj) = _run([
        lambda: hypersurface_hodge(fan, d, t),
        lambda: moduli_samples(fan, d, t, seed, 3),
        lambda: evaluate_projections(witness, e, c, random_coefficients=randomized,
                                     with_p0=macaulay is None),
    ])

    warnings = _seed_warnings(samples, seeds, "dim R_e")
    mu = min(samples)
    witness_mu = witness.dim(e)
    if witness_mu != mu:
        warnings.append(f"witness section has dim R_e = {witness_mu}, generic value is {mu}")
    if macaulay is not None:
        p0, p0_method = macaulay, "weighted-macaulay"
    else:
        p0_method = "rank"
    if h_top == 0:
        rhs, holds = None, False
        warnings.append("criterion inapplicable: h_top = 0")
    else:
        rhs = inequality_rhs(h_top, h_next)
        holds = mu >= rhs
    cert = Certificate(instance, h_top, h_next, mu, rhs, holds, p0, p0_method, p1, p1_surj,
                       label, seeds, warnings)
    assert cert.verify()
    return cert


def check_toric(fan, d, t, seed=0, sections="auto"):
    """Certificate for a generic hypersurface of degree ``[tD]`` on a toric variety."""
    d = d if isinstance(d, TorusDivisor) else TorusDivisor(d)
    if len(d) != fan.r:
        raise InputError(f"divisor has {len(d)} coefficients, fan has {fan.r} rays")
    if t < 1:
        raise InputError("t must be at least 1")
    if fan.n < 4:
        raise DimensionTooSmall(f"n = {fan.n} < 4")
    ok, _ = is_cartier(fan, d)
    if not ok:
        raise NotCartier(f"{d!r} is not Cartier")
    if not is_ample_toric(fan, d):
        raise NotAmple(f"{d!r} is not ample")
    instance = {"kind": "toric", "fan": fan.name or fan.to_document(),
                "divisor": list(d.coefficients), "t": t}
    return _hypersurface_certificate(fan, d, t, seed, sections, instance)


def weighted_macaulay_condition(w, d, c, e):
    """Sufficient condition for injectivity of ``R_e -> Hom(R_c, R_{c+e})`` on a WPS."""
    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    rho = (w.n + 1) * d - 2 * w.s
    return c % w.m == 0 and rho - (c + e) > -w.s + w.m * w.n


def check_wps(w, d, seed=0, sections="auto", p0_method="auto"):
    """Certificate for a generic degree-``d`` hypersurface in weighted projective space.

    ``p0_method`` chooses how injectivity of ``p0`` is decided:

    * ``"auto"`` -- the weighted Macaulay condition when some weight exceeds 1,
      ``d >= 2m`` and the condition holds; exact ranks otherwise.  With all
      weights 1 the certificate therefore coincides with the toric one.
    * ``"rank"`` -- always exact ranks.
    * ``"weighted-macaulay"`` -- the symbolic condition only; an instance that
      does not satisfy it raises :class:`CriterionInapplicable`.
    """
    w = w if isinstance(w, WeightSystem) else WeightSystem(w)
    if p0_method not in ("auto", "rank", "weighted-macaulay"):
        raise InputError(f"unknown p0 method {p0_method!r}")
    if not is_ample_wps(w, d):
        raise NotAmple(f"degree {d} is not positive")
    if d % w.m:
        raise NotCartier(f"m = {w.m} does not divide d = {d}")
    if w.n < 4:
        raise DimensionTooSmall(f"n = {w.n} < 4")
    if w.s % w.m:
        raise CriterionInapplicable(f"m = {w.m} does not divide s = {w.s}")
    fan = wps_fan(w)
    divisor = TorusDivisor([w.m] + [0] * w.n)
    t = d // w.m
    applies = d >= 2 * w.m and weighted_macaulay_condition(w, d, d - w.s, d)
    macaulay = None
    if p0_method == "weighted-macaulay":
        if not applies:
            raise CriterionInapplicable(f"weighted Macaulay condition fails for d = {d}")
        macaulay = True
    elif p0_method == "auto" and applies and max(w.weights) > 1:
        macaulay = True
    instance = {"kind": "wps", "weights": list(w.weights), "d": d}
    return _hypersurface_certificate(fan, divisor, t, seed, sections, instance, macaulay)


def scan(fan, d, t_values, seed=0, sections="auto"):
    """Certificates for each ``t`` and the first ``t`` with a NonGeneric verdict."""
    certs = [(t, check_toric(fan, d, t, seed, sections)) for t in t_values]
    first = next((t for t, c in certs if c.non_generic), None)
    return certs, first
