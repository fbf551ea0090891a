"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 hypothesis violation (the
reason, e.g. ``NotCartier``, is printed on stderr), 1 anything else.
Results go to stdout; ``--json`` output is deterministic for a given
``--seed`` and integers are written as decimal strings.
"""
import argparse
import json
import sys

from .complete_intersections import CIProblem, check_ci, ci_hodge, ci_moduli
from .errors import HypothesisViolation, InputError, IVHSError, NotCartier
from .hodge import hodge_summary, moduli_dim
from .nongenericity import _encode, check_toric, check_wps, scan
from .polytope import LatticePolytope
from .symmetrizers import generic_threshold, randomized_triviality_report
from .toric import Fan, TorusDivisor, WeightSystem, wps_fan

__all__ = ["main", "build_parser", "load_fan", "load_polytope"]

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3


# -- input documents ---------------------------------------------------------------


def _read_json(path, what):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {what} {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _int_list(value, field, path):
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                              for x in value):
        raise InputError(f"{path}: field {field} must be a list of integers")
    return value


def load_fan(path):
    """Fan from a JSON document with keys ``rays``, ``max_cones`` and optional ``name``."""
    doc = _read_json(path, "fan")
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top level must be an object")
    for key in ("rays", "max_cones"):
        if key not in doc:
            raise InputError(f"{path}: missing field {key}")
        if not isinstance(doc[key], list):
            raise InputError(f"{path}: field {key} must be a list")
    rays = [_int_list(r, f"rays[{i}]", path) for i, r in enumerate(doc["rays"])]
    cones = [_int_list(c, f"max_cones[{i}]", path) for i, c in enumerate(doc["max_cones"])]
    for i, c in enumerate(cones):
        if any(not 0 <= j < len(rays) for j in c):
            raise InputError(f"{path}: field max_cones[{i}] refers to a missing ray")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise InputError(f"{path}: field name must be a string")
    try:
        return Fan(rays, cones, name=name)
    except InputError as exc:
        raise InputError(f"{path}: {exc}") from None


def load_polytope(path):
    """Polytope from ``{"inequalities": [[a, c], ...]}`` meaning ``<a, m> + c >= 0``."""
    doc = _read_json(path, "polytope")
    if not isinstance(doc, dict) or "inequalities" not in doc:
        raise InputError(f"{path}: missing field inequalities")
    rows = []
    for i, item in enumerate(doc["inequalities"]):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], int)):
            raise InputError(f"{path}: field inequalities[{i}] must be [vector, constant]")
        rows.append((_int_list(item[0], f"inequalities[{i}][0]", path), item[1]))
    return LatticePolytope(rows, doc.get("dim"))


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _t_range(text):
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return _ints(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range like 5..8, got {text!r}")


# -- output ------------------------------------------------------------------------


def _emit(args, data, lines):
    if args.json:
        sys.stdout.write(json.dumps(_encode(data), indent=2) + "\n")
    else:
        for line in lines:
            print(line)


def _table(data):
    width = max(len(k) for k in data)
    return [f"{k:<{width}}  {_show(v)}" for k, v in data.items()]


def _show(v):
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    if isinstance(v, dict):
        return json.dumps(_encode(v))
    return str(v)


def _emit_certificate(args, cert):
    if args.json:
        sys.stdout.write(cert.to_json())
    else:
        for line in _table(cert.to_dict()):
            print(line)


# -- subcommands -------------------------------------------------------------------


def _source(args):
    """``(fan, divisor, t)`` from either ``--fan/--divisor/--t`` or ``--weights/--d``."""
    if args.weights is not None:
        if args.d is None:
            raise InputError("--weights needs --d")
        w = WeightSystem(args.weights)
        if args.d % w.m:
            raise NotCartier(f"m = {w.m} does not divide d = {args.d}")
        return wps_fan(w), TorusDivisor([w.m] + [0] * w.n), args.d // w.m
    if args.fan is None or args.divisor is None:
        raise InputError("give --fan with --divisor, or --weights with --d")
    return load_fan(args.fan), TorusDivisor(args.divisor), getattr(args, "t", 1)


def _ci(args):
    if args.n is None or args.degrees is None:
        return None
    return CIProblem(args.n, args.degrees)


def cmd_ehrhart(args):
    poly = load_polytope(args.polytope)
    e = poly.ehrhart_polynomial()
    coeffs = [str(c) for c in e.coefficients]
    data = {"dim": poly.dim, "coefficients": coeffs, "interior_points": poly.count(strict=True)}
    _emit(args, data, [f"E(t) = {e}", f"coefficients (t^0 first): {' '.join(coeffs)}",
                       f"interior points: {data['interior_points']}"])


def cmd_hodge(args):
    ci = _ci(args)
    if ci is not None:
        h = [ci_hodge(ci, p) for p in range(ci.dim + 1)]
        data = {"instance": ci.describe(), "dX": ci.dX, "primitive_hodge": h}
        _emit(args, data, _table(data))
        return
    fan, d, t = _source(args)
    s = hodge_summary(fan, d, t, args.seed)
    data = {"n": s.n, "t": s.t, "h_top": s.h_top, "h_next": s.h_next, "mu": s.mu}
    _emit(args, data, _table(data))


def cmd_moduli(args):
    ci = _ci(args)
    if ci is not None:
        data = {"instance": ci.describe(), "mu": ci_moduli(ci, args.seed)}
    else:
        fan, d, t = _source(args)
        data = {"t": t, "mu": moduli_dim(fan, d, t, args.seed)}
    _emit(args, data, _table(data))


def cmd_check(args):
    if args.kind == "toric":
        if args.fan is None or args.divisor is None:
            raise InputError("check toric needs --fan and --divisor")
        cert = check_toric(load_fan(args.fan), TorusDivisor(args.divisor), args.t, args.seed,
                           args.sections)
    elif args.kind == "wps":
        if args.weights is None or args.d is None:
            raise InputError("check wps needs --weights and --d")
        cert = check_wps(args.weights, args.d, args.seed, args.sections, args.p0_method)
    else:
        ci = _ci(args)
        if ci is None:
            raise InputError("check ci needs --n and --degrees")
        cert = check_ci(ci, args.seed)
    _emit_certificate(args, cert)


def cmd_scan(args):
    fan, d, _ = _source(args)
    certs, first = scan(fan, d, args.t_range, args.seed, args.sections)
    data = {"first_nongeneric_t": first,
            "certificates": [dict(t=t, **c.to_dict()) for t, c in certs]}
    lines = ["t   h_top  h_next  mu     rhs    p0     p1     verdict"]
    for t, c in certs:
        lines.append(f"{t:<3} {c.h_top:<6} {c.h_next:<7} {c.mu:<6} {_show(c.rhs):<6} "
                     f"{_show(c.p0_injective):<6} {_show(c.p1_nonzero):<6} {c.verdict}")
    lines.append(f"first NonGeneric t: {first}")
    _emit(args, data, lines)


def cmd_symm(args):
    threshold = generic_threshold(args.g0, args.g1)
    d = threshold if args.d is None else args.d
    report = randomized_triviality_report(args.g0, args.g1, args.g2, d, args.trials, args.seed,
                                          enforce_threshold=not args.below_threshold)
    data = dict(report.to_dict(), threshold=threshold)
    _emit(args, data, _table(data))


# -- parser ------------------------------------------------------------------------


def _common(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for every random choice")


def _toric_source(p, with_t=True):
    p.add_argument("--fan", help="fan document (JSON with rays, max_cones)")
    p.add_argument("--divisor", type=_ints, help="torus-invariant divisor, e.g. 1,0,0,0,0")
    if with_t:
        p.add_argument("--t", type=int, default=1, help="multiple of the divisor")
    p.add_argument("--weights", type=_ints, help="weighted projective space, e.g. 1,1,1,1,2")
    p.add_argument("--d", type=int, help="degree on the weighted projective space")


def _ci_source(p):
    p.add_argument("--n", type=int, help="ambient projective space P^n")
    p.add_argument("--degrees", type=_ints, help="complete intersection degrees, e.g. 3,4")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ivhs", description="Hodge numbers, moduli counts and non-genericity certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial of a lattice polytope")
    p.add_argument("--polytope", required=True, help="JSON document with inequalities")
    _common(p)
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("hodge", help="Hodge numbers with the moduli count")
    _toric_source(p)
    _ci_source(p)
    _common(p)
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("moduli", help="first-order moduli count")
    _toric_source(p)
    _ci_source(p)
    _common(p)
    p.set_defaults(func=cmd_moduli)

    p = sub.add_parser("check", help="non-genericity certificate")
    p.add_argument("kind", choices=["toric", "wps", "ci"])
    _toric_source(p)
    _ci_source(p)
    p.add_argument("--sections", choices=["auto", "fermat", "random"], default="auto",
                   help="section used for the multiplication predicates")
    p.add_argument("--p0-method", choices=["auto", "rank", "weighted-macaulay"], default="auto",
                   help="weighted projective spaces: how p0 injectivity is decided")
    _common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan", help="certificates over a range of t")
    _toric_source(p, with_t=False)
    p.add_argument("--t", dest="t_range", type=_t_range, required=True, help="e.g. 5..8")
    p.add_argument("--sections", choices=["auto", "fermat", "random"], default="auto")
    _common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("symm", help="randomized symmetrizer triviality report")
    p.add_argument("--g0", type=int, required=True)
    p.add_argument("--g1", type=int, required=True)
    p.add_argument("--g2", type=int, required=True)
    p.add_argument("--d", type=int, help="dimension of E0 (default: the threshold)")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--below-threshold", action="store_true",
                   help="allow d below the threshold (no expectation on the result)")
    _common(p)
    p.set_defaults(func=cmd_symm)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        args.func(args)
    except HypothesisViolation as exc:
        print(f"{exc.reason}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IVHSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - last-resort exit code
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
