"""Critical biconnected graphs: recognition, terminal parts, and the chains with four degree-2 vertices."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .connectivity import Cutset
from .decomposition import DecompositionTree, Part, bt_tree
from .errors import DomainError, InvariantViolation
from .graph import Graph, VertexSet, degree2_vertices, is_simple_cycle
from .oracles import oracle_critical

log = logging.getLogger(__name__)

MIDDLE_KINDS = ("triangle", "cycle4", "block4")


@dataclass(frozen=True)
class ChainDescription:
    """Terminal cycle, then alternating single cutsets and middle parts, then terminal cycle.

    A bare 4-cycle has no single cutsets and is described with ``degenerate=True``.
    """

    kinds: tuple[str, ...]
    terminal_lengths: tuple[int, ...]
    parts: tuple[VertexSet, ...] = ()
    cutsets: tuple[VertexSet, ...] = ()
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "degenerate": self.degenerate,
            "middle_kinds": list(self.kinds),
            "terminal_lengths": list(self.terminal_lengths),
            "parts": [list(p) for p in self.parts],
            "cutsets": [list(c) for c in self.cutsets],
        }


@dataclass(frozen=True)
class CriticalReport:
    is_critical: bool
    degree2: VertexSet
    witness: int | None = None
    evidence: tuple[VertexSet, ...] = ()
    chain: ChainDescription | None = None
    oracle: bool | None = field(default=None, compare=False)

    def to_json(self) -> dict:
        d = {
            "critical": self.is_critical,
            "degree2": list(self.degree2),
            "witness": self.witness,
            "evidence_parts": [list(p) for p in self.evidence],
        }
        if self.chain is not None:
            d["chain"] = self.chain.to_json()
        if self.oracle is not None:
            d["oracle"] = self.oracle
        return d


def _tree(g: Graph, tree: DecompositionTree | None) -> DecompositionTree:
    return bt_tree(g) if tree is None else tree


def _rigid(a: Part) -> bool:
    """Blocks and triangles: the parts whose interior vertices can be deleted safely."""
    return a.kind.is_block or a.kind.length == 3


def is_critical(g: Graph, tree: DecompositionTree | None = None, with_oracle: bool = False) -> CriticalReport:
    """Critical iff every block part and every triangle part has empty interior."""
    if g.n < 4:
        raise DomainError("critical biconnected graphs need at least 4 vertices")
    tree = _tree(g, tree)
    rigid = [a for a in tree.parts if _rigid(a)]
    offenders = [a for a in rigid if a.interior]
    deg2 = degree2_vertices(g)
    oracle = oracle_critical(g) if with_oracle else None
    if offenders:
        witness = min(v for a in offenders for v in a.interior)
        report = CriticalReport(False, deg2, witness, tuple(a.members for a in offenders), oracle=oracle)
    else:
        report = CriticalReport(True, deg2, None, tuple(a.members for a in rigid), oracle=oracle)
    if oracle is not None and oracle != report.is_critical:
        raise InvariantViolation("structural criticality verdict disagrees with the deletion oracle")
    return report


def terminal_parts(tree: DecompositionTree) -> list[tuple[Part, Cutset]]:
    nb = tree.neighbors()
    return [(a, nb[a][0]) for a in tree.parts if len(nb[a]) == 1]


def terminal_part_check(g: Graph, tree: DecompositionTree | None = None) -> list[tuple[Part, VertexSet]]:
    """For each leaf part: a cycle of length >= 4 whose vertices outside its cutset have degree 2."""
    tree = _tree(g, tree)
    out = []
    for a, s in terminal_parts(tree):
        if not (a.kind.is_cycle and a.kind.length >= 4):
            raise InvariantViolation(f"terminal part {a.members} is {a.kind}, not a cycle of length >= 4")
        rest = tuple(v for v in a.members if v not in s.members)
        if any(len(g.adj[v]) != 2 for v in rest):
            raise InvariantViolation(f"terminal part {a.members} has a non-cutset vertex of degree > 2")
        out.append((a, rest))
    return out


def _middle_kind(a: Part) -> str | None:
    if a.kind.is_cycle and a.kind.length == 3:
        return "triangle"
    if a.kind.is_cycle and a.kind.length == 4:
        return "cycle4"
    if a.kind.is_block and len(a) == 4:
        return "block4"
    return None


def classify_exactly_four(g: Graph, tree: DecompositionTree | None = None) -> ChainDescription | None:
    """Chain description of a critical graph with exactly four degree-2 vertices.

    Returns None, after logging why, if the structure is not the expected chain.
    """
    tree = _tree(g, tree)
    report = is_critical(g, tree)
    if not report.is_critical or len(report.degree2) != 4:
        raise DomainError("needs a critical biconnected graph with exactly four vertices of degree 2")
    if not tree.cutsets:
        if g.n == 4 and is_simple_cycle(g):
            return ChainDescription((), (4,), (g.vertices,), (), degenerate=True)
        log.warning("no single cutsets, but the graph is not a 4-cycle")
        return None
    nb = tree.neighbors()
    leaves = [x for x in tree.nodes() if len(nb[x]) == 1]
    if len(leaves) != 2 or any(len(nb[x]) > 2 for x in tree.nodes()):
        log.warning("decomposition tree is not a path with two leaves")
        return None
    start = min(leaves, key=lambda a: a.members)
    seq = [start]
    while len(seq) < len(tree.nodes()):
        nxt = [y for y in nb[seq[-1]] if y not in seq]
        seq.append(nxt[0])
    ps = seq[0::2]
    cs = seq[1::2]
    lengths = []
    for a in (ps[0], ps[-1]):
        if not (a.kind.is_cycle and a.kind.length >= 4):
            log.warning("terminal part %s is %s", a.members, a.kind)
            return None
        lengths.append(a.kind.length)
    kinds = []
    for i, a in enumerate(ps[1:-1]):
        kind = _middle_kind(a)
        flank = set(cs[i].members) | set(cs[i + 1].members)
        if kind is None or a.interior or set(a.members) != flank or len(a.boundary) not in (3, 4):
            log.warning("middle part %s (%s) breaks the chain pattern", a.members, a.kind)
            return None
        kinds.append(kind)
    return ChainDescription(
        tuple(kinds), tuple(lengths), tuple(a.members for a in ps), tuple(c.members for c in cs)
    )


def generate_critical_chain(middle: list[str] | tuple[str, ...] = (), terminals: tuple[int, int] = (4, 4)) -> Graph:
    """Build a critical graph whose decomposition tree is the requested chain.

    Every single cutset is an edge of the output. A triangle shares one vertex
    between its two cutsets; 4-vertex middle parts use disjoint cutsets, joined
    as the 4-cycle a-b-c-d or as K4.
    """
    middle = list(middle)
    for kind in middle:
        if kind not in MIDDLE_KINDS:
            raise DomainError(f"unknown middle kind {kind!r}; expected one of {MIDDLE_KINDS}")
    if len(terminals) != 2 or min(terminals) < 4:
        raise DomainError("terminal cycles need length >= 4")
    edges: set[tuple[int, int]] = set()
    counter = iter(range(10**6))

    def add(u, v):
        edges.add((min(u, v), max(u, v)))

    # first terminal: cycle through the cutset edge (a, b)
    t0 = [next(counter) for _ in range(terminals[0])]
    for u, v in zip(t0, t0[1:] + t0[:1]):
        add(u, v)
    a, b = t0[-2], t0[-1]
    for kind in middle:
        if kind == "triangle":
            c = next(counter)
            add(a, c)
            add(b, c)
            a, b = b, c
        else:
            c, d = next(counter), next(counter)
            add(c, d)
            if kind == "cycle4":
                add(b, c)
                add(d, a)
            else:
                for u, v in ((a, c), (a, d), (b, c), (b, d)):
                    add(u, v)
            a, b = c, d
    # second terminal closes on the last cutset edge
    inner = [next(counter) for _ in range(terminals[1] - 2)]
    ring = [a, *inner, b]
    for u, v in zip(ring, ring[1:]):
        add(u, v)
    return Graph.from_edges(sorted(edges))
