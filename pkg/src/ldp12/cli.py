"""Command line: ``ldp12 {verify,cone,batch,dedekind,svg}``.

Exit codes: 0 when every check passes, 1 when an identity check fails (an
implementation bug, since the identities are theorems), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import random_ldp, write_corpus
from .dedekind import dedekind_sum_fast
from .fan import cone_params
from .identity import verify_cone, verify_global
from .lattice import format_rational
from .polygon import polygon_from_json, require_ldp
from .reduction import reduction_chain, verify_step
from .svg import KINDS, write_svg

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load_polygons(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        try:
            docs = [json.loads(text)]
        except json.JSONDecodeError:
            docs = [json.loads(line) for line in text.splitlines() if line.strip()]
        polys = [polygon_from_json(d) for d in docs]
        for p in polys:
            require_ldp(p)
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    if not polys:
        raise InputError(f"{path} holds no polygon")
    return polys


def _traces(cones):
    out = []
    for c in cones:
        steps = reduction_chain(c)
        out.append([dict(s.to_json(), ok=verify_step(s)) for s in steps])
    return out


def cmd_verify(args) -> int:
    polys = _load_polygons(args.input)
    results = []
    ok = True
    for p in polys:
        report = verify_global(p)
        if args.trace_reduction:
            report.reduction_traces = _traces([r.cone for r in report.cones])
            ok &= all(step["ok"] for trace in report.reduction_traces for step in trace)
        ok &= report.ok
        results.append(report.to_json(per_cone=args.per_cone))
    _emit(results[0] if len(results) == 1 else results)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cone(args) -> int:
    try:
        c = cone_params((args.x1, args.y1), (args.x2, args.y2))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = verify_cone(c)
    out = report.to_json()
    ok = report.ok
    if args.trace_reduction:
        trace = _traces([c])[0]
        out["reduction"] = trace
        ok &= all(step["ok"] for step in trace)
    _emit(out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_batch(args) -> int:
    if args.count < 0 or args.bound < 1 or args.max_vertices < 3:
        raise InputError("need count >= 0, bound >= 1, max-vertices >= 3")
    polys = [random_ldp(args.seed + i, args.bound, args.max_vertices) for i in range(args.count)]
    passed = failed = 0
    rhs_values = []
    for p in polys:
        report = verify_global(p)
        rhs_values.append(report.rhs)
        if report.ok:
            passed += 1
        else:
            failed += 1
    summary = {"pass": passed, "fail": failed}
    if rhs_values:
        summary.update(
            {
                "min_rhs": format_rational(min(rhs_values)),
                "max_rhs": format_rational(max(rhs_values)),
                "reflexive": sum(1 for r in rhs_values if r == 12),
                "seed": args.seed,
                "count": args.count,
                "bound": args.bound,
            }
        )
    if args.out:
        write_corpus(polys, args.out)
    _emit(summary)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_dedekind(args) -> int:
    try:
        value = dedekind_sum_fast(args.h, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(format_rational(value))
    return EXIT_OK


def cmd_svg(args) -> int:
    polys = _load_polygons(args.input)
    try:
        write_svg(polys[0], args.what, args.out)
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ldp12",
        description="Exact verification of 12*sum(kappa+1)^2 = nvol(P) + nvol(P*) for LDP polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify every identity for a polygon file")
    p.add_argument("input", help='polygon JSON {"vertices": [[x, y], ...]} or one polygon per line')
    p.add_argument("--per-cone", action="store_true", help="include the per-cone breakdown")
    p.add_argument("--trace-reduction", action="store_true", help="include reduction chains")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cone", help="report on the cone spanned by (X1, Y1) and (X2, Y2)")
    for name in ("x1", "y1", "x2", "y2"):
        p.add_argument(name, type=int, metavar=name.upper())
    p.add_argument("--trace-reduction", action="store_true")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("batch", help="verify a batch of random LDP polygons")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--out", help="also write the polygons as newline-delimited JSON")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("dedekind", help="print the Dedekind sum s(h, k)")
    p.add_argument("h", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("svg", help="draw a polygon, its dual, its sails or the dual chain")
    p.add_argument("input")
    p.add_argument("--what", choices=KINDS, default="polygon")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_svg)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _emit({"error": str(exc)})
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
