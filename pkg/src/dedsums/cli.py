"""Command-line front end.

Every successful invocation prints JSON on stdout (one object, or JSON lines
for sweep reports followed by one aggregate object); diagnostics go to
stderr.  Exit codes: 0 success with no mismatch, 1 usage/parse error, 2 when
any verification reports a mismatch verdict.

Rationals on the command line are "p/q" strings; characters are "k:label"
with the canonical dot-joined exponent label ("0" is the principal
character).  Sweep grids expand deterministically from the flags; identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bernoulli import Polynomial, bernoulli_number, bernoulli_poly, periodic_bernoulli
from .dedekind import SumSpec, compute_sum
from .dirichlet import character_from_label, enumerate_characters
from .exactnum import rational_from_string, scalar_to_json
from .integrals import (ProductIntegralSpec, product_integral_direct,
                        product_integral_formula)
from .verify import IDENTITY_IDS, aggregate, default_grid, sweep, verify_identity

__all__ = ["main", "entry"]


class _UsageError(Exception):
    pass


def _frac(text: str) -> Fraction:
    try:
        return rational_from_string(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad rational literal {text!r}: {exc}")


def _char(text: str):
    try:
        k_str, _, label = text.partition(":")
        k = int(k_str)
        return character_from_label(k, label or "0")
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"bad character spec {text!r} (want k:label): {exc}")


def _frac_list(text: str) -> list[Fraction]:
    return [_frac(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise _UsageError(f"bad integer list {text!r}: {exc}")


def _emit(payload, pretty: bool) -> None:
    if pretty:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True))


def _parse_range(text: str) -> list[int]:
    """"2..6" -> [2,3,4,5,6]; "1,3,5" -> [1,3,5]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so a subparser's default cannot clobber a pre-subcommand flag
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="indent JSON output")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="compact JSON output (the default)")
    ap = argparse.ArgumentParser(
        prog="dedsums",
        parents=[common],
        description="Exact Dedekind sums, Bernoulli-polynomial integrals, and "
                    "reciprocity-identity verification.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("bernoulli", help="Bernoulli numbers / polynomials / periodic values")
    p.add_argument("--number", type=int, help="print B_n")
    p.add_argument("--poly", type=int, help="print coefficients of B_n(x)")
    p.add_argument("--periodic", type=int, help="degree of the periodic function")
    p.add_argument("--x", help="evaluation point p/q for --periodic")

    p = add_parser("char", help="Dirichlet characters")
    csub = p.add_subparsers(dest="char_command", required=True)
    cl = csub.add_parser("list", parents=[common], help="enumerate characters mod k")
    cl.add_argument("--modulus", type=int, required=True)
    cl.add_argument("--filter", default="all",
                    choices=["all", "primitive", "nonprincipal_primitive"])
    cs = csub.add_parser("show", parents=[common], help="one character, optionally evaluated")
    cs.add_argument("--modulus", type=int, required=True)
    cs.add_argument("--label", required=True)
    cs.add_argument("--eval", type=int, dest="eval_at")

    p = add_parser("sum", help="Dedekind-type sums by direct summation")
    p.add_argument("--family", required=True,
                   choices=["classical", "apostol", "char_single", "char_pair",
                            "hat", "tilde"])
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--char1", help="k:label")
    p.add_argument("--char2", help="k:label")

    p = add_parser("integral", help="product integrals of Bernoulli polynomials")
    p.add_argument("mode", choices=["direct", "formula"])
    p.add_argument("--degrees", required=True)
    p.add_argument("--slopes", required=True)
    p.add_argument("--offsets", required=True)
    p.add_argument("--x", required=True)

    p = add_parser("verify", help="verify one identity instance")
    _add_param_flags(p)

    p = add_parser("sweep", help="verify an identity over a parameter grid")
    _add_param_flags(p)
    p.add_argument("--k", help="comma list of moduli, e.g. 3,4,5,7")
    p.add_argument("--k-pairs", help="modulus pairs, e.g. 3:4,3:5,4:5")
    p.add_argument("--p-range", help="e.g. 2..6 or 1,3,5")
    p.add_argument("--bc-max", type=int)
    p.add_argument("--count", type=int, help="random spec count (int-32-oracle, int-17)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--reports", action="store_true",
                   help="emit every report line, not only mismatches")
    return ap


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--id", required=True, help="identity id, one of: " + ", ".join(IDENTITY_IDS))
    for flag in ("--p", "--b", "--c", "--n", "--m", "--l", "--b1", "--b2"):
        p.add_argument(flag, type=int)
    for flag in ("--x", "--y", "--y1", "--y2", "--t", "--q", "--alpha", "--beta"):
        p.add_argument(flag)
    p.add_argument("--s", type=float)
    p.add_argument("--char", help="k:label")
    p.add_argument("--char1", help="k:label")
    p.add_argument("--char2", help="k:label")
    p.add_argument("--f", help="polynomial coefficients, ascending, e.g. 0,0,1")
    p.add_argument("--degrees")
    p.add_argument("--slopes")
    p.add_argument("--offsets")
    p.add_argument("--force", action="store_true",
                   help="compute outside the stated hypothesis (exploration)")
    p.add_argument("--series-terms", type=int)
    p.add_argument("--tolerance", type=float, help="relative tolerance (Laplace only)")


def _collect_params(args) -> dict:
    params = {}
    for key in ("p", "b", "c", "n", "m", "l", "b1", "b2"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = v
    for key in ("x", "y", "y1", "y2", "t", "q", "alpha", "beta"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = _frac(v)
    if getattr(args, "s", None) is not None:
        params["s"] = args.s
    for key in ("char", "char1", "char2"):
        v = getattr(args, key, None)
        if v is not None:
            params[key] = _char(v)
    if getattr(args, "f", None) is not None:
        params["f"] = Polynomial(_frac_list(args.f))
    if getattr(args, "degrees", None) is not None:
        params["degrees"] = tuple(_int_list(args.degrees))
    if getattr(args, "slopes", None) is not None:
        params["slopes"] = tuple(str(v) for v in _frac_list(args.slopes))
    if getattr(args, "offsets", None) is not None:
        params["offsets"] = tuple(str(v) for v in _frac_list(args.offsets))
    if getattr(args, "force", False):
        params["force"] = True
    if getattr(args, "series_terms", None) is not None:
        params["series_terms"] = args.series_terms
    if getattr(args, "tolerance", None) is not None:
        params["tolerance"] = args.tolerance
    return params


def _cmd_bernoulli(args) -> int:
    if args.number is not None:
        _emit({"n": args.number, "value": scalar_to_json(bernoulli_number(args.number))},
              args.pretty)
    elif args.poly is not None:
        poly = bernoulli_poly(args.poly)
        _emit({"n": args.poly, "coeffs": [scalar_to_json(c) for c in poly.coeffs]},
              args.pretty)
    elif args.periodic is not None:
        if args.x is None:
            raise _UsageError("--periodic needs --x")
        val = periodic_bernoulli(args.periodic, _frac(args.x))
        _emit({"n": args.periodic, "x": args.x, "value": scalar_to_json(val)}, args.pretty)
    else:
        raise _UsageError("bernoulli needs one of --number / --poly / --periodic")
    return 0


def _cmd_char(args) -> int:
    if args.char_command == "list":
        chars = enumerate_characters(args.modulus, args.filter)
        _emit([c.to_json() for c in chars], args.pretty)
    else:
        chi = _char(f"{args.modulus}:{args.label}")
        payload = chi.to_json()
        if args.eval_at is not None:
            payload["value_at"] = {"n": args.eval_at,
                                   "value": scalar_to_json(chi(args.eval_at))}
        _emit(payload, args.pretty)
    return 0


def _cmd_sum(args) -> int:
    chi1 = _char(args.char1) if args.char1 else None
    chi2 = _char(args.char2) if args.char2 else None
    if args.family == "char_single" and chi2 is None:
        chi2 = None
    try:
        spec = SumSpec(args.family, args.p, args.b, args.c, chi1, chi2)
        value = compute_sum(spec)
    except ValueError as exc:
        raise _UsageError(str(exc))
    payload = {"family": args.family, "p": args.p, "b": args.b, "c": args.c,
               "q": spec.q,
               "chars": [f"{chi.modulus}:{chi.label}"
                         for chi in (chi1, chi2) if chi is not None],
               "value": scalar_to_json(value)}
    _emit(payload, args.pretty)
    return 0


def _cmd_integral(args) -> int:
    degrees = tuple(_int_list(args.degrees))
    slopes = tuple(_frac_list(args.slopes))
    offsets = tuple(_frac_list(args.offsets))
    try:
        spec = ProductIntegralSpec(degrees, slopes, offsets, _frac(args.x))
        fn = product_integral_direct if args.mode == "direct" else product_integral_formula
        value = fn(spec)
    except ValueError as exc:
        raise _UsageError(str(exc))
    _emit({"mode": args.mode, "spec": spec.to_json(), "value": scalar_to_json(value)},
          args.pretty)
    return 0


def _cmd_verify(args) -> int:
    params = _collect_params(args)
    try:
        report = verify_identity(args.id, params)
    except KeyError as exc:
        raise _UsageError(str(exc))
    except (ValueError, TypeError) as exc:
        raise _UsageError(f"malformed parameters for {args.id}: {exc}")
    _emit(report.to_json_dict(), args.pretty)
    return 2 if report.verdict == "mismatch" else 0


def _cmd_sweep(args) -> int:
    options = {}
    if args.k:
        options["ks"] = tuple(_int_list(args.k))
    if args.k_pairs:
        pairs = []
        for tok in args.k_pairs.split(","):
            a, _, b = tok.partition(":")
            pairs.append((int(a), int(b)))
        options["k_pairs"] = tuple(pairs)
    if args.p_range:
        options["p_values"] = tuple(_parse_range(args.p_range))
    if args.bc_max is not None:
        options["bc_max"] = args.bc_max
    if args.count is not None:
        options["count"] = args.count
    options["seed"] = args.seed
    try:
        grid = default_grid(args.id, **options)
    except KeyError as exc:
        raise _UsageError(str(exc))
    if getattr(args, "tolerance", None) is not None:
        for point in grid:
            point["tolerance"] = args.tolerance
    reports = sweep(args.id, grid, jobs=args.jobs)
    for report in reports:
        if args.reports or report.verdict == "mismatch":
            print(report.to_json())
    summary = aggregate(args.id, reports)
    _emit(summary, args.pretty)
    return 2 if summary["mismatch"] else 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    if not hasattr(args, "pretty"):
        args.pretty = False
    handlers = {
        "bernoulli": _cmd_bernoulli,
        "char": _cmd_char,
        "sum": _cmd_sum,
        "integral": _cmd_integral,
        "verify": _cmd_verify,
        "sweep": _cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


def entry() -> None:
    raise SystemExit(main())
