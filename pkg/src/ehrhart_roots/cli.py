"""Command-line interface.

Exit codes: 0 success, 1 user error, 2 resource budget, 3 numerical
non-convergence, 4 verification failure.  Errors go to stderr as one JSON
object; nothing is written to stdout on an error path.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import verify
from .conjecture import reports_to_csv, scan
from .ehrhart import ehrhart_from_delta, g_polynomial, theorem_ehrhart
from .errors import EhrhartError
from .lattice import DEFAULT_BUDGET, LatticeSimplex, delta_vector, family_simplex, theorem_simplex
from .roots import DEFAULT_PRECISION, DEFAULT_TOLERANCE, RootSettings, find_roots, full_ehrhart_roots
from .routh import certify_max_real_part


class UsageError(EhrhartError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ints(text, count, name):
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--{name} expects {count} comma-separated integers, got {text!r}") from None
    if len(values) != count:
        raise UsageError(f"--{name} expects {count} comma-separated integers, got {text!r}")
    return values


def _positive_fraction(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _range(text):
    """``"a"`` or ``"a:b"`` (inclusive)."""
    try:
        parts = [int(x) for x in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if len(parts) == 1:
        parts *= 2
    if len(parts) != 2 or parts[0] > parts[1]:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use lo:hi with lo <= hi")
    return range(parts[0], parts[1] + 1)


def _k_policy(text):
    if text in ("half", "all"):
        return text
    try:
        return _positive_int(text)
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError("--k takes 'half', 'all' or a positive integer") from None


def _simplex(args):
    sources = [x for x in (args.file, args.family, args.theorem) if x is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --file, --family M,D, --theorem M,D,K")
    if args.file is not None:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        return LatticeSimplex.from_json(text)
    if args.family is not None:
        return family_simplex(*_ints(args.family, 2, "family"))
    return theorem_simplex(*_ints(args.theorem, 3, "theorem"))


def _settings(args):
    return RootSettings(precision_bits=args.precision, tolerance=args.tolerance)


def cmd_delta(args):
    s = _simplex(args)
    dv = delta_vector(s, budget=args.budget)
    return json.dumps({"delta": list(dv.entries), "dim": dv.dim, "volume": dv.volume})


def cmd_simplex(args):
    return _simplex(args).to_json()


def cmd_poly(args):
    if args.g is not None:
        if any(x is not None for x in (args.file, args.family, args.theorem)):
            raise UsageError("--g cannot be combined with a simplex source")
        p = g_polynomial(*_ints(args.g, 3, "g"))
    elif args.theorem is not None and args.file is None and args.family is None:
        p = theorem_ehrhart(*_ints(args.theorem, 3, "theorem"))
    else:
        p = ehrhart_from_delta(delta_vector(_simplex(args), budget=args.budget))
    return p.to_json()


def cmd_roots(args):
    if args.full:
        roots = full_ehrhart_roots(args.m, args.d, args.k, _settings(args))
    else:
        roots = find_roots(g_polynomial(args.m, args.d, args.k), args.precision, args.tolerance)
    return json.dumps(roots.to_dict())


def cmd_certify(args):
    bound = certify_max_real_part(g_polynomial(args.m, args.d, args.k), args.width)
    return json.dumps(bound.to_dict())


def cmd_scan(args):
    reports = scan(args.m, args.d, args.k, _settings(args), args.certify_width, args.workers)
    if args.format == "json":
        return json.dumps([r.to_dict() for r in reports])
    return reports_to_csv(reports).rstrip("\n")


def cmd_verify(args):
    names = args.claim or None
    unknown = [n for n in names or () if n not in verify.CLAIMS]
    if unknown:
        raise UsageError(f"unknown claim(s) {unknown}; choose from {sorted(verify.CLAIMS)}")
    results = verify.run(names, quick=args.quick)
    table = verify.format_table(results)
    ok = all(r.ok for r in results)
    return table, (0 if ok else 4)


def build_parser():
    parser = _Parser(prog="ehrhart-roots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def simplex_source(p):
        p.add_argument("--file", help="simplex JSON {\"vertices\": [[...], ...]}")
        p.add_argument("--family", metavar="M,D", help="the lower triangular family simplex")
        p.add_argument("--theorem", metavar="M,D,K", help="simplex with delta_0=1, delta_k=m")
        p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)

    def numerics(p):
        p.add_argument("--precision", type=_positive_int, default=DEFAULT_PRECISION, help="working precision in bits")
        p.add_argument("--tolerance", type=_positive_float, default=DEFAULT_TOLERANCE)

    def mdk(p):
        p.add_argument("m", type=int)
        p.add_argument("d", type=int)
        p.add_argument("k", type=int)

    p = sub.add_parser("delta", help="delta-vector of a simplex")
    simplex_source(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("simplex", help="print a constructed simplex as JSON")
    simplex_source(p)
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("poly", help="Ehrhart polynomial (or g with --g) as exact JSON")
    simplex_source(p)
    p.add_argument("--g", metavar="M,D,K", help="the degree-k factor g_{m,d,k}")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("roots", help="roots of g_{m,d,k} (all Ehrhart roots with --full)")
    mdk(p)
    numerics(p)
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("certify", help="certified bracket for the largest real part of g_{m,d,k}")
    mdk(p)
    p.add_argument("--width", type=_positive_fraction, default=Fraction(1, 10))
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="scan (m, d, k) cells for roots outside [-d, d-1]")
    p.add_argument("--m", type=_range, required=True, metavar="LO[:HI]")
    p.add_argument("--d", type=_range, required=True, metavar="LO[:HI]")
    p.add_argument("--k", type=_k_policy, default="half", help="'half', 'all' or a fixed k")
    p.add_argument("--certify-width", type=_positive_fraction, default=None)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write to this file instead of stdout")
    numerics(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="reproduce the published claims")
    p.add_argument("--quick", action="store_true", help="skip scan cells with d > 40")
    p.add_argument("--claim", action="append", help=f"one of {', '.join(verify.CLAIMS)}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except EhrhartError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(json.dumps({"error": "ValueError", "message": str(exc)}), file=sys.stderr)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(result + "\n")
    else:
        print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
