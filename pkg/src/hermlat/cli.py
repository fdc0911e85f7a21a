"""Command-line entry point: truant, escalate, tables, check."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .cache import ResumeCache
from .escalator import (
    CertMode,
    ResourceLimit,
    certify_universal,
    escalation_tree,
    represents_hermitian,
    truant_hermitian,
)
from .hlattice import format_gram, parse_gram
from .tables import BUILDERS, build_report

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


class InputError(Exception):
    pass


def _envelope(command: str, args: argparse.Namespace, body: dict) -> dict:
    echo = {k: v for k, v in vars(args).items() if k != "func"}
    return {"tool": "hermlat", "version": __version__, "command": command, "input": echo, **body}


def _lattice(args):
    try:
        return parse_gram(args.gram, args.m, diag=args.diag)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_truant(args) -> int:
    L = _lattice(args)
    t = truant_hermitian(L, args.limit)
    shown = range(1, (t if t is not None else args.limit + 1))
    witnesses = {}
    for n in list(shown)[: args.witnesses]:
        _, w = represents_hermitian(L, n)
        witnesses[n] = [str(x) for x in w]
    if args.json:
        doc = _envelope("truant", args, {
            "lattice": format_gram(L), "truant": t,
            "result": f"universal up to {args.limit}" if t is None else t,
            "witnesses": {str(k): v for k, v in witnesses.items()},
        })
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(f"hermlat {__version__}  truant  {format_gram(L)}  limit={args.limit}")
    print(f"universal up to {args.limit}" if t is None else t)
    for n, w in witnesses.items():
        print(f"  {n} = H({', '.join(w)})")
    return EXIT_OK


def cmd_escalate(args) -> int:
    cache = ResumeCache.open(args.cache) if args.resume else None
    code = EXIT_OK
    try:
        tree = escalation_tree(args.m, max_depth=args.depth, truant_limit=args.truant_limit,
                               certify_bound=args.certify_bound, max_rank=args.max_rank,
                               max_nodes=args.max_nodes, cache=cache)
    except ResourceLimit as exc:
        tree = exc.partial
        code = EXIT_RESOURCE
        print(f"resource limit: {exc}", file=sys.stderr)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    finally:
        if cache is not None:
            cache.save()
    if args.json:
        print(json.dumps(_envelope("escalate", args, {"complete": code == EXIT_OK, "tree": tree.to_dict()}),
                         indent=2))
        return code
    print(f"hermlat {__version__}  escalate  m={args.m} depth={args.depth}")
    for n in tree.nodes:
        extra = f" truant={n.truant}" if n.truant is not None else ""
        if n.duplicate_of is not None:
            extra += f" same-as={n.duplicate_of}"
        parent = "-" if n.parent is None else n.parent
        print(f"  #{n.id} parent={parent} depth={n.depth} rank={n.rank} {n.status.value}{extra}  "
              f"{format_gram(n.lattice, header=False)}")
    print(f"truants: {', '.join(map(str, sorted(tree.truant_set())))}")
    return code


def cmd_tables(args) -> int:
    only = set(args.only) if args.only else None
    try:
        rep = build_report(args.table, only)
    except KeyError as exc:
        raise InputError(str(exc)) from exc
    if args.csv:
        sys.stdout.write(rep.to_csv())
    elif args.json:
        print(json.dumps(_envelope("tables", args, rep.to_dict()), indent=2, default=str))
    else:
        print(f"hermlat {__version__}  tables {args.table}")
        print(rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FAILS


def cmd_check(args) -> int:
    L = _lattice(args)
    try:
        cert = certify_universal(L, CertMode(args.mode), args.bound)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    doc = _envelope("check", args, {"certificate": cert.to_dict()})
    if args.json or not args.text:
        print(json.dumps(doc, indent=2))
    else:
        print(f"hermlat {__version__}  check  {format_gram(L)}  mode={args.mode}")
        print(cert.claim())
        if cert.citation:
            print(f"  {cert.citation}")
    return EXIT_OK if cert.certified else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hermlat", description="Escalation and universality of Hermitian lattices.")
    p.add_argument("--version", action="version", version=f"hermlat {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def lattice_args(sp):
        sp.add_argument("--m", type=int, required=True, help="square-free m > 0 for Q(sqrt(-m))")
        sp.add_argument("--gram", required=True, help='Gram rows "1,0;0,2"; entries like w, cw, -1+w, c(1+w)')
        sp.add_argument("--diag", action="store_true", help='read --gram "1;2" as the diagonal lattice <1,2>')

    t = sub.add_parser("truant", help="smallest positive integer not represented")
    lattice_args(t)
    t.add_argument("--limit", type=int, default=300)
    t.add_argument("--witnesses", type=int, default=15, help="number of witnesses to print")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_truant)

    e = sub.add_parser("escalate", help="breadth-first escalation tree from <1>")
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--depth", type=int, default=3)
    e.add_argument("--truant-limit", type=int, default=300)
    e.add_argument("--certify-bound", type=int, default=2000)
    e.add_argument("--max-rank", type=int, default=None)
    e.add_argument("--max-nodes", type=int, default=20000)
    e.add_argument("--resume", action="store_true", help="reuse and update the on-disk node cache")
    e.add_argument("--cache", default=None, help="cache path (default: $HERMLAT_CACHE)")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_escalate)

    tb = sub.add_parser("tables", help="recompute a reference table and diff it")
    tb.add_argument("table", choices=sorted(BUILDERS))
    tb.add_argument("--only", type=int, nargs="*", help="restrict to these m")
    fmt = tb.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    tb.set_defaults(func=cmd_tables)

    c = sub.add_parser("check", help="universality certificate")
    lattice_args(c)
    c.add_argument("--mode", choices=[x.value for x in CertMode], default="critical")
    c.add_argument("--bound", type=int, default=2000)
    c.add_argument("--json", action="store_true", help="JSON certificate (the default)")
    c.add_argument("--text", action="store_true", help="short human summary instead of JSON")
    c.set_defaults(func=cmd_check)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad input and 0 for --help / --version
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OverflowError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
