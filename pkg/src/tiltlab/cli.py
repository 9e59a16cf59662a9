"""Command line interface.

Exit codes: 0 success, 1 mismatch / failed check / unreadable input,
2 precondition failure (not representation-finite, not a source, guard).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import quiver as qv
from .errors import (
    BadArrow,
    CyclicQuiver,
    GuardExceeded,
    NotRepFinite,
    NotSource,
    UnknownVertex,
)
from .example_a4 import load_fixtures, replay
from .indec import build_table
from .tilting import tilting_poset, with_summand
from .verify import sweep, verify_flipflop

EXIT_OK, EXIT_FAIL, EXIT_PRECONDITION = 0, 1, 2


class InputError(Exception):
    pass


def _load_quiver(path):
    try:
        return qv.Quiver.from_json(Path(path).read_text())
    except (OSError, ValueError, KeyError, TypeError, BadArrow, CyclicQuiver) as exc:
        raise InputError(f"cannot read quiver from {path}: {exc}") from exc


def _parse_vertex(q, raw):
    for v in q.vertices:
        if str(v) == raw:
            return v
    raise UnknownVertex(f"vertex {raw} not in quiver")


def cmd_enumerate(args):
    q = _load_quiver(args.quiver)
    table = build_table(q)
    tp = tilting_poset(q)
    if args.json:
        out = table.to_dict()
        out["tilting"] = [table.names(t) for t in tp.elements]
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"quiver: {q}")
    print(f"indecomposables: {len(table)}")
    for i, (d, lab) in enumerate(zip(table.dims, table.labels)):
        print(f"  {i:3d}  {lab:>12}  {list(d)}")
    print(f"tilting modules: {len(tp)}")
    for lab in tp.labels():
        print(f"  {lab}")
    return EXIT_OK


def cmd_hasse(args):
    q = _load_quiver(args.quiver)
    tp = tilting_poset(q)
    bold = ()
    if args.mark_simple is not None:
        x = _parse_vertex(q, args.mark_simple)
        bold = with_summand(tp, tp.table.simple_id(x))
    dot = tp.to_dot(bold=bold)
    if args.dot and args.dot != "-":
        Path(args.dot).write_text(dot)
    else:
        sys.stdout.write(dot)
    if args.json:
        Path(args.json).write_text(tp.to_json())
    return EXIT_OK


def cmd_verify(args):
    q = _load_quiver(args.quiver)
    x = _parse_vertex(q, args.source)
    report = verify_flipflop(q, x, check_isomorphism=not args.no_iso)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_example_a4(args):
    diff = replay(load_fixtures(args.fixtures))
    if diff:
        print("A4 example: MISMATCH")
        for line in diff:
            print("  " + line)
        return EXIT_FAIL
    print("A4 example: exact match (nodes, bold subsets, Hasse edges, restriction maps, reflection)")
    return EXIT_OK


def cmd_sweep(args):
    dt = qv.DynkinType(args.type, args.rank)
    guard = {args.type: args.max_rank} if args.max_rank is not None else None
    reports = sweep(dt, guard=guard, check_isomorphism=args.iso)
    ok = True
    for r in reports:
        ok &= r.passed
        print(json.dumps(r.to_dict()))
    print(f"# {dt}: {len(reports)} instances, {'all pass' if ok else 'FAILURES'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="tiltlab", description="Tilting posets of Dynkin quivers and BGP flip-flops.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("enumerate", help="list indecomposables and tilting modules")
    s.add_argument("quiver", help="quiver JSON file")
    s.add_argument("--json", action="store_true", help="machine-readable output")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("hasse", help="DOT Hasse diagram of the tilting poset")
    s.add_argument("quiver")
    s.add_argument("--dot", default="-", help="output file (default stdout)")
    s.add_argument("--mark-simple", metavar="X", help="bold the modules containing the simple at X")
    s.add_argument("--json", metavar="FILE", help="also write elements, order matrix and Hasse edges")
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("verify", help="verify the flip-flop relation for a source")
    s.add_argument("quiver")
    s.add_argument("--source", required=True)
    s.add_argument("--no-iso", action="store_true", help="skip the exact poset isomorphism search")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("example-a4", help="replay the A4 example against the bundled fixtures")
    s.add_argument("--fixtures", help="directory with replacement fixture files")
    s.set_defaults(func=cmd_example_a4)

    s = sub.add_parser("sweep", help="verify every orientation and source of a Dynkin diagram")
    s.add_argument("--type", choices=["A", "D", "E"], required=True)
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--max-rank", type=int, help="override the rank guard for this family")
    s.add_argument("--iso", action="store_true", help="also run the poset isomorphism search")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (NotRepFinite, NotSource, UnknownVertex, GuardExceeded, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
