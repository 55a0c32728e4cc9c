"""Parts of a decomposition by pairwise-independent cutsets, and the tree they form.

``parts`` splits recursively: take the smallest remaining cutset S, cut the
augmented graph along S into component-plus-S pieces, and recurse into each
piece with the cutsets lying inside it. ``bt_tree`` is the instance over the
single 2-cutsets of a biconnected graph; ``block_cut_tree`` is the classic
k = 1 tree computed independently by a lowpoint DFS.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Union

from .connectivity import (
    Cutset,
    CutsetFamily,
    enumerate_cutsets,
    is_biconnected,
    is_k_connected,
    separates,
    single_cutsets,
    verify_family,
)
from .errors import DomainError, InvariantViolation
from .graph import Graph, VertexSet, add_edges, components, induced, is_connected, is_simple_cycle, vset


@dataclass(frozen=True)
class PartKind:
    kind: str  # "cycle" | "block"
    length: int | None = None

    @property
    def is_cycle(self) -> bool:
        return self.kind == "cycle"

    @property
    def is_block(self) -> bool:
        return self.kind == "block"

    def __str__(self) -> str:
        return f"Cycle({self.length})" if self.is_cycle else "Block"


BLOCK = PartKind("block")


def Cycle(length: int) -> PartKind:
    return PartKind("cycle", length)


@dataclass(frozen=True, order=True)
class Part:
    members: VertexSet
    interior: VertexSet = field(compare=False)
    boundary: VertexSet = field(compare=False)
    kind: PartKind | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        label = "{" + ",".join(map(str, self.members)) + "}"
        return f"{label} {self.kind}" if self.kind else label


Node = Union[Cutset, Part]


@dataclass(frozen=True)
class DecompositionTree:
    """Bipartite tree on cutsets and parts; S ~ A iff S is a subset of A."""

    graph: Graph
    family: CutsetFamily
    parts: tuple[Part, ...]
    edges: tuple[tuple[Cutset, Part], ...]
    root: Part | None = None

    @property
    def cutsets(self) -> tuple[Cutset, ...]:
        return self.family.cutsets

    def nodes(self) -> list[Node]:
        return [*self.cutsets, *self.parts]

    def neighbors(self) -> dict[Node, list[Node]]:
        nb: dict[Node, list[Node]] = {x: [] for x in self.nodes()}
        for s, a in self.edges:
            nb[s].append(a)
            nb[a].append(s)
        return nb

    def degree(self, node: Node) -> int:
        return len(self.neighbors()[self.node(node)])

    def node(self, key) -> Node:
        """Resolve a Cutset, a Part, or a raw vertex set to the tree's node."""
        if isinstance(key, Cutset):
            if key in self.family:
                return key
        elif isinstance(key, Part):
            for a in self.parts:
                if a.members == key.members:
                    return a
        else:
            members = vset(key)
            for a in self.parts:
                if a.members == members:
                    return a
            if Cutset(members) in self.family:
                return Cutset(members)
        raise DomainError(f"{key} is not a node of the tree")

    def part(self, members: Iterable[int]) -> Part:
        node = self.node(vset(members))
        if not isinstance(node, Part):
            raise DomainError(f"{members} is a cutset node, not a part")
        return node

    def leaves(self) -> list[Node]:
        return [x for x, nb in self.neighbors().items() if len(nb) == 1]

    def is_tree(self) -> bool:
        nodes = self.nodes()
        if len(self.edges) != len(nodes) - 1:
            return False
        nb = self.neighbors()
        seen = {nodes[0]}
        queue = deque([nodes[0]])
        while queue:
            x = queue.popleft()
            for y in nb[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(nodes)

    def with_root(self, root: Part | Iterable[int]) -> DecompositionTree:
        return replace(self, root=self.part(root.members if isinstance(root, Part) else root))


@dataclass(frozen=True)
class BlockCutTree:
    cutpoints: tuple[int, ...]
    blocks: tuple[VertexSet, ...]
    edges: tuple[tuple[int, VertexSet], ...]

    def is_tree(self) -> bool:
        nodes = [("c", a) for a in self.cutpoints] + [("b", b) for b in self.blocks]
        if len(self.edges) != len(nodes) - 1:
            return False
        nb: dict = {x: [] for x in nodes}
        for a, b in self.edges:
            nb[("c", a)].append(("b", b))
            nb[("b", b)].append(("c", a))
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            for y in nb[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(nodes)

    def leaves(self) -> list:
        count: dict = {}
        for a, b in self.edges:
            count[("c", a)] = count.get(("c", a), 0) + 1
            count[("b", b)] = count.get(("b", b), 0) + 1
        return [x for x, c in count.items() if c == 1]


def augment(g: Graph, family: CutsetFamily | Iterable[Iterable[int]]) -> Graph:
    """G^S: ``g`` plus every missing edge inside every cutset of the family."""
    sets = family.members() if isinstance(family, CutsetFamily) else [vset(s) for s in family]
    return add_edges(g, [p for s in sets for p in combinations(s, 2)])


def _prepare(g: Graph, family: CutsetFamily) -> CutsetFamily:
    if not is_k_connected(g, family.k):
        raise DomainError(f"graph is not {family.k}-connected")
    if not family.independent:
        family = verify_family(g, family)
    return family


def _split(h: Graph, cuts: list[VertexSet]) -> list[VertexSet]:
    if not cuts:
        return [h.vertices]
    s, rest = cuts[0], cuts[1:]
    pieces = [vset(comp + s) for comp in components(h, s)]
    out: list[VertexSet] = []
    claimed = [0] * len(rest)
    for piece in pieces:
        inside = set(piece)
        sub = []
        for i, t in enumerate(rest):
            if set(t) <= inside:
                sub.append(t)
                claimed[i] += 1
        out.extend(_split(induced(h, piece), sub))
    if any(c != 1 for c in claimed):
        raise DomainError(f"family is not pairwise independent around {s}")
    return out


def _make_parts(members: list[VertexSet], family: CutsetFamily) -> list[Part]:
    on_cut = {v for c in family for v in c}
    return [
        Part(a, tuple(v for v in a if v not in on_cut), tuple(v for v in a if v in on_cut))
        for a in sorted(members)
    ]


def parts(g: Graph, family: CutsetFamily) -> list[Part]:
    """Part(G, family), in canonical order, with interiors and boundaries."""
    family = _prepare(g, family)
    h = augment(g, family)
    return _make_parts(_split(h, family.members()), family)


def _build_tree(g: Graph, family: CutsetFamily, ps: list[Part]) -> DecompositionTree:
    edges = tuple(
        (s, a) for s in family.cutsets for a in ps if set(s.members) <= set(a.members)
    )
    return DecompositionTree(g, family, tuple(ps), edges)


def decomposition_tree(g: Graph, family: CutsetFamily) -> DecompositionTree:
    family = _prepare(g, family)
    return _build_tree(g, family, parts(g, family))


def classify_part(g: Graph, family: CutsetFamily, a: Part | Iterable[int]) -> PartKind:
    """Cycle(|A|) if G'(A) is a simple cycle, Block if it is triconnected.

    A triangle is a cycle: triconnected graphs have at least four vertices.
    """
    members = a.members if isinstance(a, Part) else vset(a)
    h = induced(augment(g, family), members)
    if is_simple_cycle(h):
        return Cycle(h.n)
    if is_k_connected(h, 3):
        return BLOCK
    raise InvariantViolation(f"part {members} is neither a cycle nor triconnected")


def bt_tree(g: Graph) -> DecompositionTree:
    """Decomposition tree over the single cutsets, with every part classified."""
    if g.n < 3 or not is_biconnected(g):
        raise DomainError("graph is not biconnected")
    family = single_cutsets(g)
    ps = [replace(a, kind=classify_part(g, family, a)) for a in parts(g, family)]
    return _build_tree(g, family, ps)


def augmented_part_graph(tree: DecompositionTree, a) -> Graph:
    """G^S(A) for a part of the tree."""
    node = tree.part(a.members if isinstance(a, Part) else a)
    return induced(augment(tree.graph, tree.family), node.members)


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Blocks and cutpoints via an iterative lowpoint DFS."""
    if g.n == 0 or not is_connected(g):
        raise DomainError("graph is not connected")
    adj = {v: sorted(g.adj[v]) for v in g.vertices}
    root = g.vertices[0]
    if g.n == 1:
        return BlockCutTree((), ((root,),), ())
    disc = {root: 0}
    low = {root: 0}
    blocks: list[VertexSet] = []
    cutpoints: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    stack = [(root, None, iter(adj[root]))]
    root_children = 0
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                disc[w] = low[w] = len(disc)
                edge_stack.append((u, w))
                stack.append((w, u, iter(adj[w])))
                if u == root:
                    root_children += 1
                advanced = True
                break
            if disc[w] < disc[u]:
                low[u] = min(low[u], disc[w])
                edge_stack.append((u, w))
        if advanced:
            continue
        stack.pop()
        if parent is None:
            continue
        low[parent] = min(low[parent], low[u])
        if low[u] >= disc[parent]:
            if parent != root:
                cutpoints.add(parent)
            block = set()
            while True:
                e = edge_stack.pop()
                block.update(e)
                if e == (parent, u):
                    break
            blocks.append(vset(block))
    if root_children > 1:
        cutpoints.add(root)
    blocks.sort()
    cps = tuple(sorted(cutpoints))
    edges = tuple((a, b) for a in cps for b in blocks if a in b)
    return BlockCutTree(cps, tuple(blocks), edges)


def nonsingle_from_cycles(g: Graph, tree: DecompositionTree) -> CutsetFamily:
    """Non-neighbouring vertex pairs of every cycle part of length at least 4."""
    h = augment(g, tree.family)
    pairs = []
    for a in tree.parts:
        if a.kind is not None and a.kind.is_cycle and len(a) >= 4:
            pairs.extend(p for p in combinations(a.members, 2) if not h.has_edge(*p))
    return CutsetFamily.of(pairs, 2)


def tree_separation(tree: DecompositionTree, s, b, b2) -> bool:
    """True iff deleting cutset node ``s`` leaves parts ``b`` and ``b2`` in different subtrees."""
    s = tree.node(s)
    if not isinstance(s, Cutset):
        raise DomainError(f"{s} is not a cutset node")
    b, b2 = tree.node(b), tree.node(b2)
    if b == b2:
        return False
    nb = tree.neighbors()
    seen = {s, b}
    queue = deque([b])
    while queue:
        x = queue.popleft()
        for y in nb[x]:
            if y not in seen:
                if y == b2:
                    return False
                seen.add(y)
                queue.append(y)
    return True


def graph_separation(tree: DecompositionTree, s, b, b2) -> bool:
    """Host-graph counterpart of :func:`tree_separation`."""
    s, b, b2 = tree.node(s), tree.node(b), tree.node(b2)
    return separates(tree.graph, s.members, b.members, b2.members)


def part_sides(g: Graph, s: Cutset) -> list[VertexSet]:
    """Part({S}): each component of G - S together with S."""
    return [vset(comp + s.members) for comp in components(g, s.members)]


def enumerate_k1_tree(g: Graph) -> DecompositionTree:
    """Generic decomposition tree over all cutpoints, for comparison with the block-cut tree."""
    return decomposition_tree(g, enumerate_cutsets(g, 1))
