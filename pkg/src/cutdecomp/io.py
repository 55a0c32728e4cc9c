"""Edge-list and DIMACS parsing, list files, and DOT/JSON export of trees."""

from __future__ import annotations

from typing import Iterable

from .decomposition import BlockCutTree, DecompositionTree, Part
from .errors import ParseError
from .graph import Graph

SCHEMA_VERSION = 1


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        out = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None
    if any(v < 0 for v in out):
        raise ParseError("vertex ids must be nonnegative", lineno)
    return out


def _add(edges: dict, u: int, v: int, lineno: int) -> None:
    if u == v:
        raise ParseError(f"loop at vertex {u}", lineno)
    e = (min(u, v), max(u, v))
    if e in edges:
        raise ParseError(f"duplicate edge {e} (first on line {edges[e]})", lineno)
    edges[e] = lineno


def parse_edgelist(text: str) -> Graph:
    """One ``u v`` pair per line; a lone ``v`` declares an isolated vertex. ``#`` starts a comment."""
    edges: dict[tuple[int, int], int] = {}
    verts: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        nums = _ints(line.split(), lineno)
        if len(nums) == 1:
            verts.add(nums[0])
        elif len(nums) == 2:
            _add(edges, nums[0], nums[1], lineno)
        else:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
    return Graph.from_edges(sorted(edges), verts)


def parse_dimacs(text: str) -> Graph:
    """``p edge n m`` header and ``e u v`` lines; vertices are 1..n as written."""
    edges: dict[tuple[int, int], int] = {}
    n = None
    declared_m = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {line!r}", lineno)
            n, declared_m = _ints(parts[2:], lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"bad edge line {line!r}", lineno)
            u, v = _ints(parts[1:], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            _add(edges, u, v, lineno)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if declared_m is not None and declared_m != len(edges):
        raise ParseError(f"header declares {declared_m} edges, found {len(edges)}")
    return Graph.from_edges(sorted(edges), range(1, n + 1))


def looks_like_dimacs(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.strip()
        if line and line[0] not in "c#":
            return line.startswith("p ") or line.startswith("p\t")
    return False


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "dimacs" if looks_like_dimacs(text) else "edgelist"
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ParseError(f"unknown format {fmt!r}")


def format_edgelist(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.sorted_edges()]
    touched = {v for e in g.edges for v in e}
    lines += [str(v) for v in g.vertices if v not in touched]
    return "\n".join(lines) + "\n"


def parse_lists(text: str) -> dict[int, list[int]]:
    """``vertex: c1,c2,...`` per line."""
    out: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"expected 'vertex: colors', got {line!r}", lineno)
        head, tail = line.split(":", 1)
        (v,) = _ints([head.strip()], lineno)
        colors = _ints([t.strip() for t in tail.split(",") if t.strip()], lineno)
        if not colors:
            raise ParseError(f"empty list for vertex {v}", lineno)
        if v in out:
            raise ParseError(f"vertex {v} listed twice", lineno)
        out[v] = colors
    return out


def _label(vs: Iterable[int]) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def _part_json(a: Part) -> dict:
    return {
        "members": list(a.members),
        "interior": list(a.interior),
        "boundary": list(a.boundary),
        "kind": None if a.kind is None else str(a.kind),
    }


def tree_to_json(tree: DecompositionTree) -> dict:
    return {
        "k": tree.family.k,
        "cutsets": [list(s.members) for s in tree.cutsets],
        "parts": [_part_json(a) for a in tree.parts],
        "edges": [[list(s.members), list(a.members)] for s, a in tree.edges],
        "root": None if tree.root is None else list(tree.root.members),
    }


def tree_to_dot(tree: DecompositionTree, name: str = "BT") -> str:
    lines = [f"graph {name} {{"]
    ids = {}
    for i, s in enumerate(tree.cutsets):
        ids[s] = f"s{i}"
        lines.append(f'  s{i} [shape=box, label="{_label(s.members)}"];')
    for i, a in enumerate(tree.parts):
        ids[a] = f"p{i}"
        label = _label(a.members) + (f"\\n{a.kind}" if a.kind else "")
        lines.append(f'  p{i} [shape=ellipse, label="{label}"];')
    for s, a in sorted(tree.edges, key=lambda e: (e[0].members, e[1].members)):
        lines.append(f"  {ids[s]} -- {ids[a]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def blockcut_to_json(t: BlockCutTree) -> dict:
    return {
        "cutpoints": list(t.cutpoints),
        "blocks": [list(b) for b in t.blocks],
        "edges": [[a, list(b)] for a, b in t.edges],
    }


def blockcut_to_dot(t: BlockCutTree, name: str = "B") -> str:
    lines = [f"graph {name} {{"]
    for a in t.cutpoints:
        lines.append(f'  c{a} [shape=box, label="{a}"];')
    for i, b in enumerate(t.blocks):
        lines.append(f'  b{i} [shape=ellipse, label="{_label(b)}"];')
    index = {b: i for i, b in enumerate(t.blocks)}
    for a, b in t.edges:
        lines.append(f"  c{a} -- b{index[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
