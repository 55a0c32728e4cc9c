"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 precondition failure (or an invalid
certificate under ``verify``), 3 search budget exceeded, 4 internal invariant
violated.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import coloring, critical, decomposition, io, oracles, planarity
from .connectivity import enumerate_cutsets, is_biconnected, single_cutsets, split_pair
from .errors import BudgetError, DomainError, InvariantViolation, ParseError
from .graph import Graph
from .planarity import K5, K33, SubdivisionWitness

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> tuple[Graph, str]:
    text = _read(args.input)
    return io.parse_graph(text, args.format), hashlib.sha256(text.encode()).hexdigest()


def _report(args, digest: str | None, result: dict, started: float) -> dict:
    echo = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "timing", "text")}
    rep = {"schema": io.SCHEMA_VERSION, "command": echo, "input_sha256": digest, "result": result}
    if args.timing:
        rep["timing_s"] = round(time.perf_counter() - started, 6)
    return rep


def _emit(args, rep: dict) -> None:
    if getattr(args, "text", False):
        _emit_text(rep)
    else:
        sys.stdout.write(json.dumps(rep, indent=2, sort_keys=True) + "\n")


def _emit_text(rep: dict) -> None:
    bold = sys.stdout.isatty() and "NO_COLOR" not in os.environ
    for key, val in rep["result"].items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val, sort_keys=True)
        if bold and isinstance(val, bool):
            val = f"\033[1m{val}\033[0m"
        sys.stdout.write(f"{key}: {val}\n")


def cmd_cutsets(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    fam = enumerate_cutsets(g, args.k)
    cuts = fam.cutsets
    matrix = [[None if s == t else not any(split_pair(g, s, t)) for t in cuts] for s in cuts]
    result = {
        "k": args.k,
        "cutsets": [list(c.members) for c in cuts],
        "independent": matrix,
    }
    if args.k == 2:
        result["single"] = [list(c.members) for c in single_cutsets(g)]
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK


def cmd_tree(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    if args.k1:
        t = decomposition.block_cut_tree(g)
        if args.dot:
            sys.stdout.write(io.blockcut_to_dot(t))
            return EXIT_OK
        result = {"kind": "block-cutpoint", **io.blockcut_to_json(t)}
    else:
        t = decomposition.bt_tree(g)
        if args.dot:
            sys.stdout.write(io.tree_to_dot(t))
            return EXIT_OK
        result = {"kind": "BT", **io.tree_to_json(t)}
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK


_COLORERS = {
    "augmented": coloring.color_via_augmented,
    "parts+1": coloring.color_parts_plus_one,
    "blocks+1": coloring.color_blocks_plus_one,
}


def cmd_color(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    tree = decomposition.bt_tree(g)
    if args.strategy == "list":
        if args.lists:
            lists = io.parse_lists(_read(args.lists))
        else:
            size = coloring.list_bound(g, tree, args.statement)
            lists = {v: list(range(size)) for v in g.vertices}
        cert = coloring.list_color(g, tree, lists, args.statement)
    else:
        cert = _COLORERS[args.strategy](g, tree).canonical()
    result = {"certificate": cert.to_json(), "proper": cert.verify(g)}
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK


def cmd_planar(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    rep = planarity.planarity_general(g, args.cap)
    result = {"planar": rep["planar"]}
    if not rep["planar"]:
        w = rep["witness"]
        result["block"] = list(rep["block"])
        result["witness"] = w.to_json()
        result["witness_verified"] = w.verify(g)
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK


def cmd_critical(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    if not is_biconnected(g):
        raise DomainError("graph is not biconnected")
    tree = decomposition.bt_tree(g)
    rep = critical.is_critical(g, tree, with_oracle=args.oracle)
    result = rep.to_json()
    if args.chain and rep.is_critical and len(rep.degree2) == 4:
        chain = critical.classify_exactly_four(g, tree)
        result["chain"] = None if chain is None else chain.to_json()
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK


def cmd_generate(args) -> int:
    middle = [k.strip() for k in args.middle.split(",") if k.strip()] if args.middle else []
    try:
        terminals = tuple(int(x) for x in args.terminals.split(","))
    except ValueError:
        raise ParseError(f"bad --terminals {args.terminals!r}") from None
    g = critical.generate_critical_chain(middle, terminals)
    sys.stdout.write(io.format_edgelist(g))
    return EXIT_OK


def _witness_from_json(d: dict) -> SubdivisionWitness:
    model = {"K5": K5, "K3,3": K33}.get(d.get("model"))
    if model is None:
        raise ParseError(f"unsupported witness model {d.get('model')!r}")
    main = {int(m): int(h) for m, h in d["main"].items()}
    paths = {(int(u), int(v)): tuple(int(x) for x in p) for u, v, p in d["paths"]}
    return SubdivisionWitness(Graph.from_edges([tuple(e) for e in d["edges"]]), model, main, paths)


def cmd_verify(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    try:
        doc = json.loads(_read(args.certificate))
    except json.JSONDecodeError as exc:
        raise ParseError(f"certificate is not JSON: {exc.msg}", exc.lineno) from None
    body = doc.get("result", doc)
    try:
        if "certificate" in body or "assignment" in body:
            cert = coloring.ColoringCertificate.from_json(body.get("certificate", body))
            problems = cert.problems(g)
            kind = "coloring"
        elif "witness" in body or "paths" in body:
            problems = _witness_from_json(body.get("witness", body)).problems(g)
            kind = "kuratowski"
        else:
            raise ParseError("no coloring certificate or witness found")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed certificate: {exc}") from None
    result = {"kind": kind, "valid": not problems, "problems": problems}
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK if not problems else EXIT_PRECONDITION


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    g, digest = _load(args)
    if args.what == "chromatic":
        result = {"chromatic": oracles.oracle_chromatic(g)}
    elif args.what == "critical":
        result = {"critical": oracles.oracle_critical(g)}
    elif args.what == "cutsets":
        result = {"cutsets": [list(c) for c in oracles.oracle_cutsets(g, args.k)]}
    else:
        fam = single_cutsets(g)
        result = {"parts": [list(p) for p in oracles.oracle_parts(g, fam)]}
    _emit(args, _report(args, digest, result, started))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cutdecomp", description="Decomposition trees of biconnected graphs.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, graph_input=True):
        sp = sub.add_parser(name, help=help_text) if help_text else sub.add_parser(name)
        if graph_input:
            sp.add_argument("input", help="graph file, or - for stdin")
            sp.add_argument("--format", choices=("auto", "edgelist", "dimacs"), default="auto")
            sp.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")
            sp.add_argument("--text", action="store_true", help="human-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("cutsets", cmd_cutsets, "list cutsets, their independence, and single cutsets")
    sp.add_argument("--k", type=int, choices=(1, 2), default=2)

    sp = add("tree", cmd_tree, "decomposition tree BT(G), or the block-cutpoint tree with --k1")
    out = sp.add_mutually_exclusive_group()
    out.add_argument("--dot", action="store_true")
    out.add_argument("--json", action="store_true", help="JSON report (default)")
    sp.add_argument("--k1", action="store_true")

    sp = add("color", cmd_color, "constructive coloring certificate")
    sp.add_argument("--strategy", choices=coloring.STRATEGIES, default="augmented")
    sp.add_argument("--lists", help="list file: 'vertex: c1,c2,...' per line")
    sp.add_argument("--statement", type=int, choices=(1, 2), default=1)

    sp = add("planar", cmd_planar, "planarity verdict with a Kuratowski witness")
    sp.add_argument("--cap", type=int, default=planarity.BLOCK_CAP)

    sp = add("critical", cmd_critical, "criticality report")
    sp.add_argument("--chain", action="store_true", help="describe the chain when there are four degree-2 vertices")
    sp.add_argument("--oracle", action="store_true", help="also run the deletion oracle")

    sp = add("generate", cmd_generate, "emit a critical chain graph as an edge list", graph_input=False)
    sp.add_argument("--middle", default="", help="comma-separated kinds: triangle, cycle4, block4")
    sp.add_argument("--terminals", default="4,4")

    sp = add("verify", cmd_verify, "re-check a coloring certificate or Kuratowski witness")
    sp.add_argument("certificate", help="JSON report or certificate file")

    sp = add("oracle", cmd_oracle, None)
    sp.add_argument("--what", choices=("chromatic", "critical", "cutsets", "parts"), default="chromatic")
    sp.add_argument("--k", type=int, default=2)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
