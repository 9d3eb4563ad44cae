"""Command-line front end.

Batch-oriented: every command reads a multisegment (or sweep bounds)
from its arguments, prints exact results to stdout, and encodes its
outcome in the exit status: 0 success / no discrepancy, 1 discrepancy,
2 usage or parse error, 3 overflow or cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import mackey, verify
from .errors import CapExceeded, Overflow, ParseError, SegcharError
from .multiseg import Multisegment
from .qchar import standard_qchar

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _parse_multisegment(text: str) -> Multisegment:
    stripped = text.strip()
    if stripped.startswith("{"):
        return Multisegment.from_json(stripped)
    return Multisegment.parse(stripped)


def _parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise ParseError(f"bad window {text!r}, expected lo:hi") from exc


def _row_lines(row: dict[Multisegment, int]) -> list[tuple[int, Multisegment]]:
    order = sorted(
        row.items(), key=lambda kv: sorted((s.b, s.a, k) for s, k in kv[0].items())
    )
    return [(c, n) for n, c in order]


def _cmd_dominant(args) -> int:
    m = _parse_multisegment(args.multisegment)
    row = verify.a_row_via_tableaux(m)
    lines = _row_lines(row)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "source": m.to_json_obj(),
                    "entries": [
                        {"mult": c, "target": n.to_json_obj()} for c, n in lines
                    ],
                }
            )
        )
    else:
        for c, n in lines:
            print(f"{c} * {n}")
    return EXIT_OK


def _cmd_amatrix(args) -> int:
    m = _parse_multisegment(args.multisegment)
    routes = [r.strip() for r in args.routes.split(",")] if args.routes else []
    rows = {"a-tableau": verify.a_row_via_tableaux(m)}
    for route in routes:
        if route == "mackey":
            rows[route] = verify.a_row_via_mackey(m)
        elif route == "j-dominant":
            rows[route] = verify.a_row_via_jdominant(m)
        elif route == "shuffle":
            rows[route] = {
                n: c
                for n in verify.multisegments_with_support(m.support())
                for c in [verify.a_via_shuffle(m, n)]
                if c
            }
        elif route != "a-tableau":
            raise ParseError(f"unknown route {route!r}")
    lines = _row_lines(rows["a-tableau"])
    agree = all(rows[r] == rows["a-tableau"] for r in rows)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "source": m.to_json_obj(),
                    "entries": [
                        {
                            "target": n.to_json_obj(),
                            "counts": {r: rows[r].get(n, 0) for r in rows},
                        }
                        for _, n in lines
                    ],
                    "routes_agree": agree,
                }
            )
        )
    else:
        for c, n in lines:
            extra = ""
            if len(rows) > 1:
                extra = "  (" + ", ".join(
                    f"{r}={rows[r].get(n, 0)}" for r in rows if r != "a-tableau"
                ) + ")"
            print(f"{c} * {n}{extra}")
    return EXIT_OK if agree else EXIT_DISCREPANCY


def _cmd_qchar(args) -> int:
    m = _parse_multisegment(args.multisegment)
    f = standard_qchar(m, args.n)
    if args.dominant:
        f = f.dominant_part()
    g = f.to_drinfeld(args.n)
    if args.format == "json":
        print(json.dumps(g.to_json_obj()))
    else:
        print(g)
    return EXIT_OK


def _cmd_restrict(args) -> int:
    m = _parse_multisegment(args.multisegment)
    if args.s < 1:
        raise ParseError(f"slot count {args.s} must be >= 1")
    terms = mackey.mackey_restriction(m.admissible_ordering(), args.s)
    order = sorted(terms.items(), key=lambda kv: str(kv[0]))
    if args.format == "json":
        print(
            json.dumps(
                {
                    "source": m.to_json_obj(),
                    "factors": args.s,
                    "terms": [
                        {
                            "mult": c,
                            "parts": [p.to_json_obj() for p in t.parts],
                        }
                        for t, c in order
                    ],
                }
            )
        )
    else:
        for t, c in order:
            print(f"{c} * {t}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    m = _parse_multisegment(args.multisegment)
    discrepancies = []
    disc = verify.check_theorem_A(m, args.n)
    if disc is not None:
        discrepancies.append(disc)
    disc = verify.check_bijection(m)
    if disc is not None:
        discrepancies.append(disc)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": str(m),
                    "n": args.n,
                    "discrepancies": [str(d) for d in discrepancies],
                }
            )
        )
    else:
        for d in discrepancies:
            print(f"DISCREPANCY {d}")
        if not discrepancies:
            print(f"ok: {m} at rank {args.n}")
    return EXIT_DISCREPANCY if discrepancies else EXIT_OK


def _cmd_sweep(args) -> int:
    ranks = tuple(int(t) for t in args.n.split(",")) if args.n else (1, 2, 3)
    routes = (
        tuple(t.strip() for t in args.routes.split(","))
        if args.routes
        else verify.ROUTE_NAMES
    )
    config = verify.SweepConfig(
        max_height=args.max_height,
        window=_parse_window(args.window),
        ranks=ranks,
        routes=routes,
        start_index=args.start_index,
    )
    sink = (lambda rec: print(json.dumps(rec))) if args.format == "json" else None
    report = verify.sweep(config, sink)
    summary = {
        "multisegments": report.multisegments,
        "comparisons": report.comparisons,
        "discrepancies": len(report.discrepancies),
        "elapsed_seconds": round(report.elapsed, 3),
        "route_seconds": {r: round(t, 3) for r, t in report.route_seconds.items()},
    }
    if args.format == "json":
        print(json.dumps({"summary": summary}))
    else:
        for d in report.discrepancies:
            print(f"DISCREPANCY {d}")
        print(
            f"swept {summary['multisegments']} multisegments, "
            f"{summary['comparisons']} comparisons, "
            f"{summary['discrepancies']} discrepancies, "
            f"{summary['elapsed_seconds']}s"
        )
    return EXIT_OK if report.ok else EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segchar",
        description=(
            "Exact reciprocal characters and dominant q-characters of "
            "standard modules, indexed by multisegments.  Multisegment "
            "grammar: [a,b] terms joined by '+', optional 'k*' "
            "multiplicity, e.g. '[1,1]+2*[2,2]+[3,3]'.  Y(l,p) in output "
            "abbreviates the Drinfeld variable Y(l, v^p)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("dominant", help="reciprocal character, one 'count * target' line each")
    p.add_argument("multisegment")
    add_format(p)
    p.set_defaults(func=_cmd_dominant)

    p = sub.add_parser("amatrix", help="reciprocal multiplicities with per-route counts")
    p.add_argument("multisegment")
    p.add_argument("--routes", help="comma list: mackey,j-dominant,shuffle")
    add_format(p)
    p.set_defaults(func=_cmd_amatrix)

    p = sub.add_parser("qchar", help="q-character at rank N, in Y(l,p) variables")
    p.add_argument("multisegment")
    p.add_argument("--n", type=int, required=True, help="rank bound N >= 1")
    p.add_argument("--dominant", action="store_true", help="dominant part only")
    add_format(p)
    p.set_defaults(func=_cmd_qchar)

    p = sub.add_parser("restrict", help="restriction into S slots, one term per line")
    p.add_argument("multisegment")
    p.add_argument("--s", type=int, required=True, help="number of slots S >= 1")
    add_format(p)
    p.set_defaults(func=_cmd_restrict)

    p = sub.add_parser("verify", help="identity and bijection checks for one multisegment")
    p.add_argument("multisegment")
    p.add_argument("--n", type=int, required=True, help="rank bound N >= 1")
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive route comparisons over a family")
    p.add_argument("--max-height", type=int, default=5)
    p.add_argument(
        "--window",
        default="-2:2",
        help="endpoint window lo:hi; use --window=-2:2 for negative bounds",
    )
    p.add_argument("--n", help="comma list of ranks, default 1,2,3")
    p.add_argument("--routes", help=f"comma list from {','.join(verify.ROUTE_NAMES)}")
    p.add_argument("--start-index", type=int, default=0, help="resume after this many")
    add_format(p)
    p.set_defaults(func=_cmd_sweep)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (Overflow, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (SegcharError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
