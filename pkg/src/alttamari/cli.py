"""Command-line interface.

Exit codes: 0 on success, 1 on usage errors, 2 when a verification or
count comparison fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections, counting, series, trees, verify
from .delta import IncrementFunction, build_alt_tamari
from .dyck import enumerate_paths, parse_dyck
from .errors import AltTamariError


def _delta_arg(spec: str, n: int) -> IncrementFunction:
    return IncrementFunction.from_string(spec, n)


def cmd_paths(args) -> int:
    paths = enumerate_paths(args.n)
    if args.json:
        print(json.dumps([p.word for p in paths]))
    else:
        for p in paths:
            print(p.word)
    return 0


def cmd_trees(args) -> int:
    for t in trees.enumerate_trees(args.n):
        print(f"{trees.tree_to_paren(t)}\t{trees.tree_to_path(t).word}")
    return 0


def cmd_count(args) -> int:
    ok = True
    for spec in args.delta or ["tamari"]:
        d = _delta_arg(spec, args.n)
        table = counting.census(d, args.n)
        if args.json:
            print(counting.counts_to_json(table))
        elif args.csv:
            sys.stdout.write(counting.counts_to_csv(table))
        else:
            print(f"n={args.n} delta={d}")
            print(f"{'height':>8} {'count':>12} {'closed_form':>12} match")
            for k, got, want, match in table.rows():
                print(f"{k:>8} {got:>12} {want:>12} {str(match).lower()}")
            print(f"{'total':>8} {table.total():>12}")
        ok = ok and table.matches_closed_form()
    return 0 if ok else 2


def cmd_verify(args) -> int:
    failed = False
    for name, ok, detail in verify.run_checks(only=args.only, n_max=args.n_max):
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {name}: {detail}")
        failed = failed or not ok
    return 2 if failed else 0


def cmd_hasse(args) -> int:
    d = _delta_arg(args.delta, args.n)
    poset = build_alt_tamari(d)
    print(poset.to_dot(label=lambda p: p.word))
    return 0


def cmd_series(args) -> int:
    s = series.s_series(args.k, args.order)
    for n in range(args.order + 1):
        print(s[n])
    return 0


def cmd_biject(args) -> int:
    low = parse_dyck(args.bottom)
    high = parse_dyck(args.top)
    d = IncrementFunction.from_string(args.delta, low.n)
    dec = bijections.decompose(d, low, high)
    print(
        json.dumps(
            {
                "kind": str(dec.kind),
                "marked": str(dec.marked),
                "parts": [p.word for p in dec.parts],
            }
        )
    )
    return 0


def cmd_transport(args) -> int:
    low = parse_dyck(args.bottom)
    high = parse_dyck(args.top)
    d1 = IncrementFunction.from_string(args.src, low.n)
    d2 = IncrementFunction.from_string(args.dst, low.n)
    out_low, out_high = bijections.transport(d1, d2, low, high)
    print(json.dumps({"bottom": out_low.word, "top": out_high.word}))
    return 0


def cmd_refine(args) -> int:
    from .delta import refines

    d1 = IncrementFunction.from_string(args.delta, args.n)
    d2 = IncrementFunction.from_string(args.delta2, args.n)
    result = refines(d1, d2, args.n)
    print(f"Tam^{d1} refines Tam^{d2}: {result}")
    return 0 if result else 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alt-tamari",
        description="Exact combinatorics of alt-Tamari posets on Dyck paths.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=0,
        help="parallelism degree (accepted for compatibility; runs are "
        "deterministic and independent of this setting)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("paths", help="list Dyck paths of a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("trees", help="list binary trees with their Dyck words")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_trees)

    p = sub.add_parser("count", help="census vs closed-form counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", action="append", help="bitstring, tamari or dyck")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--only", help="run a single named check")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("hasse", help="DOT export of a Hasse diagram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", default="tamari")
    p.set_defaults(fn=cmd_hasse)

    p = sub.add_parser("series", help="coefficients of the height-k series")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, default=20)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("biject", help="decompose a linear interval")
    p.add_argument("--delta", required=True)
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    p.set_defaults(fn=cmd_biject)

    p = sub.add_parser("transport", help="move a linear interval between posets")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="dst", required=True)
    p.add_argument("--bottom", required=True)
    p.add_argument("--top", required=True)
    p.set_defaults(fn=cmd_transport)

    p = sub.add_parser("refine", help="check refinement between two deltas")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--delta2", required=True)
    p.set_defaults(fn=cmd_refine)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except AltTamariError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
