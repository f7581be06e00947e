"""Command-line front end.

Every engine operation is reachable through a verb; psi and the module
context always come from flags, never from the expression itself, so
expressions stay context-free.  Exit codes: 0 success, 1 a verify/solve
assertion failed, 2 expression parse error, 3 domain error (zero psi,
non-splitting polynomial, wrong context), 70 internal engine error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import kernel, suite
from .analysis import (
    Report,
    TruncationSpec,
    annihilator_normal_form,
    composition_series_report,
    decompose_report,
    dot_orbit_dimension,
    jsonify,
    verify_degree_bounds,
    verify_dot_span,
    verify_leading_term,
    whittaker_solve,
)
from .errors import DomainError, ExpressionError, ViraError
from .exprparse import (
    evaluate_module,
    evaluate_poly,
    evaluate_uea,
    parse_expression,
)
from .partitions import Pseudopartition
from .scalar import to_rational
from .whittaker import (
    ModuleContext,
    is_whittaker_vector,
    whittaker_reduce,
    act,
)
from .witt import project, witt_act, witt_context

__version__ = "0.1.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 2
EXIT_DOMAIN_ERROR = 3
EXIT_INTERNAL_ERROR = 70


def _color_enabled() -> bool:
    return sys.stdout.isatty() and os.environ.get("VIRA_COLOR", "1") != "0"


def _status(passed: bool) -> str:
    text = "PASS" if passed else "FAIL"
    if _color_enabled():
        code = "32" if passed else "31"
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _emit_json(payload):
    print(json.dumps(payload, indent=2))


def _psi(args):
    return (to_rational(args.psi1), to_rational(args.psi2))


def _context(args) -> ModuleContext:
    return ModuleContext.parse_descriptor(args.module, _psi(args))


def _trunc(args) -> TruncationSpec:
    return TruncationSpec(args.maxdeg, args.zerocap, args.zcap)


def _uea_json(elem) -> dict:
    return {
        "terms": [
            {"z": m.z_power, "word": list(m.word), "coeff": str(c)}
            for m, c in elem.sorted_terms()
        ],
        "text": str(elem),
    }


def _module_json(elem) -> dict:
    return {"terms": elem.json_terms(), "text": str(elem)}


def _print_report(report: Report, json_mode: bool, show_witness: bool = True):
    if json_mode:
        _emit_json(report.json_dict())
        return
    headline = report.headline()
    status, _, rest = headline.partition("  ")
    print(f"{_status(report.passed)}  {rest}")
    if show_witness:
        for key, value in report.witness.items():
            if key == "elements":
                continue
            rendered = jsonify(value)
            if isinstance(rendered, (dict, list)):
                rendered = json.dumps(rendered)
            print(f"  {key}: {rendered}")


def cmd_straighten(args) -> int:
    elem = evaluate_uea(parse_expression(args.expr))
    if args.json:
        _emit_json(_uea_json(elem))
    else:
        print(elem)
    return EXIT_OK


def cmd_act(args) -> int:
    ctx = _context(args)
    u = evaluate_uea(parse_expression(args.operator))
    v = evaluate_module(parse_expression(args.element), ctx)
    result = act(u, v)
    if args.json:
        _emit_json(_module_json(result))
    else:
        print(result)
    return EXIT_OK


def cmd_solve(args) -> int:
    ctx = _context(args)
    basis = whittaker_solve(ctx, _trunc(args))
    passed = args.expect_dim is None or len(basis) == args.expect_dim
    report = Report(
        check="solve",
        params={
            "module": ctx.descriptor(),
            "psi1": ctx.psi.psi1,
            "psi2": ctx.psi.psi2,
            "maxdeg": args.maxdeg,
            "zerocap": args.zerocap,
            "zcap": args.zcap,
        },
        passed=passed,
        witness={
            "dimension": len(basis),
            "basis": [str(b) for b in basis],
            "elements": [str(b) for b in basis],
        },
    )
    if args.json:
        _emit_json(report.json_dict())
    else:
        print(f"dimension: {len(basis)}")
        if basis:
            print("basis:")
            for b in basis:
                print(f"  {b}")
        if args.expect_dim is not None:
            print(f"{_status(passed)}  expected dimension {args.expect_dim}")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    if args.checker == "leading":
        report = verify_leading_term(args.k, args.a, _psi(args))
    elif args.checker == "degree":
        report = verify_degree_bounds(args.m, Pseudopartition.parse(args.lam), _psi(args))
    elif args.checker == "dotspan":
        report = verify_dot_span(args.n, args.i, Pseudopartition.parse(args.lam), _psi(args))
    elif args.checker == "vector":
        ctx = _context(args)
        v = evaluate_module(parse_expression(args.expr), ctx)
        report = Report(
            check="whittaker_vector",
            params={"module": ctx.descriptor(), "element": str(v)},
            passed=is_whittaker_vector(v),
            witness={
                "d1_dot": str(_dot(1, v)),
                "d2_dot": str(_dot(2, v)),
                "elements": [str(v)],
            },
        )
    elif args.checker == "all":
        return _verify_all(args)
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown checker {args.checker!r}")
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _dot(n, v):
    from .whittaker import dot_act

    return dot_act(n, v)


def _verify_all(args) -> int:
    reports = suite.run_all(args.seed)
    if args.json:
        _emit_json([r.json_dict() for r in reports])
    else:
        width = max(len(r.check) for r in reports)
        for r in reports:
            print(f"{_status(r.passed)}  {r.check.ljust(width)}  "
                  + " ".join(f"{k}={jsonify(v)}" for k, v in r.params.items()))
        passed = sum(1 for r in reports if r.passed)
        print(f"{passed}/{len(reports)} checks passed (kernel: {kernel.IMPL})")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def cmd_decompose(args) -> int:
    p = evaluate_poly(parse_expression(args.p))
    report = decompose_report(_psi(args), p)
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_series(args) -> int:
    report = composition_series_report(
        _psi(args), to_rational(args.xi), args.a, _trunc(args)
    )
    _print_report(report, args.json)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_annihilate(args) -> int:
    p = evaluate_poly(parse_expression(args.p))
    u = evaluate_uea(parse_expression(args.expr))
    u0, tail, residual = annihilator_normal_form(u, _psi(args), p)
    payload = {
        "u0": _uea_json(u0),
        "tail": [{"i": i, "u_i": _uea_json(ui)} for i, ui in tail],
        "residual": _uea_json(residual),
        "annihilates_w": residual.is_zero(),
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"u0: {u0}")
        for i, ui in tail:
            print(f"tail d{i} - psi_{i}: {ui}")
        print(f"residual: {residual}")
        print(f"annihilates w mod p: {'yes' if residual.is_zero() else 'no'}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    ctx = _context(args)
    v = evaluate_module(parse_expression(args.expr), ctx)
    if v.is_zero():
        raise DomainError("cannot reduce the zero element")
    trace, result = whittaker_reduce(v)
    if args.json:
        _emit_json({
            "trace": trace,
            "steps": len(trace),
            "result": _module_json(result),
        })
    else:
        print(f"trace: {trace}")
        print(f"result: {result}")
    return EXIT_OK


def cmd_orbit(args) -> int:
    ctx = _context(args)
    v = evaluate_module(parse_expression(args.expr), ctx)
    if v.is_zero():
        raise DomainError("the orbit of the zero element is trivial")
    dim, spanning = dot_orbit_dimension(v)
    if args.json:
        _emit_json({
            "dimension": dim,
            "spanning": [_module_json(s) for s in spanning],
        })
    else:
        print(f"dimension: {dim}")
        print("spanning:")
        for s in spanning:
            print(f"  {s}")
    return EXIT_OK


def cmd_witt(args) -> int:
    u = evaluate_uea(parse_expression(args.expr))
    pu = project(u)
    payload = {"projection": _uea_json(pu.lift())}
    if args.element is not None:
        ctx = witt_context(_psi(args))
        v = evaluate_module(parse_expression(args.element), ctx)
        result = witt_act(pu, v)
        payload["action"] = _module_json(result)
    if args.json:
        _emit_json(payload)
    else:
        print(f"projection: {pu}")
        if args.element is not None:
            print(f"action: {payload['action']['text']}")
    return EXIT_OK


class _ArgumentParser(argparse.ArgumentParser):
    # Accept negative rationals (-3/2) as option values; stock argparse
    # only special-cases plain negative numbers, and it installs the
    # matcher as an instance attribute.  Subparsers inherit this class.
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="vira",
        description="Exact computations in Whittaker modules over the Virasoro algebra.",
    )
    parser.add_argument(
        "--version", action="version",
        version=f"vira {__version__} (kernel: {kernel.IMPL})",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--psi1", default="1", help="value of psi(d_1), nonzero rational")
    common.add_argument("--psi2", default="1", help="value of psi(d_2), nonzero rational")
    common.add_argument(
        "--module", default="M",
        help="module context: M, L:xi=<rational>, Q:p=<poly>, or W",
    )
    common.add_argument("--maxdeg", type=int, default=4, help="truncation cap on |lam|")
    common.add_argument("--zerocap", type=int, default=2, help="truncation cap on lam(0)")
    common.add_argument("--zcap", type=int, default=2, help="truncation cap on z-powers")
    common.add_argument("--json", action="store_true", help="emit JSON reports")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("straighten", parents=[common],
                       help="rewrite an algebra expression into PBW normal form")
    p.add_argument("expr")
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("act", parents=[common],
                       help="act by an algebra element on a module element")
    p.add_argument("operator")
    p.add_argument("element")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("solve", parents=[common],
                       help="basis of Whittaker vectors in the truncated span")
    p.add_argument("--expect-dim", type=int, default=None,
                   help="fail (exit 1) unless the dimension matches")
    p.set_defaults(func=cmd_solve)

    # No common flags on the intermediate parser: they would shadow the
    # leaf options under argparse prefix matching.
    p = sub.add_parser("verify", help="run a verification check")
    vsub = p.add_subparsers(dest="checker", required=True)
    v = vsub.add_parser("leading", parents=[common],
                        help="leading-term identity for powers of one negative mode")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--a", type=int, required=True)
    v.set_defaults(func=cmd_verify, checker="leading")
    v = vsub.add_parser("degree", parents=[common],
                        help="degree bound and leading form of [d_m, d_{-lam}] w")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--lam", required=True, help="pseudopartition, e.g. '(0^2,1,3)'")
    v.set_defaults(func=cmd_verify, checker="degree")
    v = vsub.add_parser("dotspan", parents=[common],
                        help="span and vanishing bounds of one dot action")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--i", type=int, required=True)
    v.add_argument("--lam", required=True)
    v.set_defaults(func=cmd_verify, checker="dotspan")
    v = vsub.add_parser("vector", parents=[common],
                        help="check whether an element is a Whittaker vector")
    v.add_argument("expr")
    v.set_defaults(func=cmd_verify, checker="vector")
    v = vsub.add_parser("all", parents=[common],
                        help="run the full verification grid")
    v.set_defaults(func=cmd_verify, checker="all")

    p = sub.add_parser("decompose", parents=[common],
                       help="split a polynomial quotient along the roots of p")
    p.add_argument("--p", required=True, help="monic polynomial in z, e.g. '(z-1)^2*(z+3)'")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("series", parents=[common],
                       help="composition chain of the quotient by (z-xi)^a")
    p.add_argument("--xi", required=True)
    p.add_argument("--a", type=int, required=True)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("annihilate", parents=[common],
                       help="normal form against p(z) and the shifted positive modes")
    p.add_argument("--p", required=True)
    p.add_argument("expr")
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("reduce", parents=[common],
                       help="extract a Whittaker vector from a quotient-module element")
    p.add_argument("expr")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("orbit", parents=[common],
                       help="dimension of the dot-action orbit closure")
    p.add_argument("expr")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("witt", parents=[common],
                       help="project to the centerless quotient and optionally act")
    p.add_argument("expr")
    p.add_argument("element", nargs="?", default=None)
    p.set_defaults(func=cmd_witt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ExpressionError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except (ValueError, ZeroDivisionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ViraError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
