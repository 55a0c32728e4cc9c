"""Subdivisions, Kuratowski search, and planarity decided part by part.

``contains_subdivision`` is exhaustive: assign main vertices, then route model
edges one at a time along internally disjoint host paths, backtracking on
failure. It is exponential and capped at ``BLOCK_CAP`` vertices by default.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .decomposition import DecompositionTree, Part, augment, block_cut_tree, bt_tree
from .errors import BudgetError, DomainError, InvariantViolation
from .families import complete, complete_bipartite
from .graph import Edge, Graph, components, induced
from .connectivity import is_biconnected

BLOCK_CAP = 16

K5 = complete(5)
K33 = complete_bipartite(3, 3)


@dataclass(frozen=True)
class SubdivisionWitness:
    """A subgraph ``host`` of some graph that subdivides ``model``.

    ``main`` sends model vertices to host vertices; ``paths`` sends each model
    edge (u, v) to the host path from main[u] to main[v], endpoints included.
    """

    host: Graph
    model: Graph
    main: dict[int, int] = field(hash=False)
    paths: dict[Edge, tuple[int, ...]] = field(hash=False)

    def problems(self, g: Graph | None = None) -> list[str]:
        out = []
        if set(self.main) != set(self.model.vertices):
            out.append("main map does not cover the model vertices")
        images = list(self.main.values())
        if len(set(images)) != len(images):
            out.append("main map is not injective")
        if set(self.paths) != set(self.model.edges):
            out.append("paths do not match the model edges")
            return out
        inner_seen: set[int] = set()
        used_edges: set[Edge] = set()
        for (u, v), p in sorted(self.paths.items()):
            if len(p) < 2 or {p[0], p[-1]} != {self.main[u], self.main[v]}:
                out.append(f"path for {(u, v)} has wrong endpoints")
                continue
            if len(set(p)) != len(p):
                out.append(f"path for {(u, v)} is not simple")
            for w in p[1:-1]:
                if w in images:
                    out.append(f"path for {(u, v)} passes through main vertex {w}")
                if w in inner_seen:
                    out.append(f"paths share inner vertex {w}")
                inner_seen.add(w)
            for a, b in zip(p, p[1:]):
                used_edges.add((min(a, b), max(a, b)))
        if used_edges != set(self.host.edges):
            out.append("host edges differ from the union of the paths")
        if set(self.host.vertices) != set(images) | inner_seen:
            out.append("host vertices differ from main plus inner vertices")
        if g is not None and not (set(self.host.edges) <= set(g.edges)):
            out.append("host is not a subgraph of the given graph")
        return out

    def verify(self, g: Graph | None = None) -> bool:
        return not self.problems(g)

    def contract(self) -> Graph:
        """Replace each path by a single edge between its ends, relabelled to model ids."""
        back = {h: m for m, h in self.main.items()}
        return Graph.from_edges(
            [(back[p[0]], back[p[-1]]) for p in self.paths.values()], self.model.vertices
        )

    def to_json(self) -> dict:
        return {
            "model": "K5" if self.model == K5 else "K3,3" if self.model == K33 else "custom",
            "main": {str(m): h for m, h in sorted(self.main.items())},
            "paths": [[u, v, list(p)] for (u, v), p in sorted(self.paths.items())],
            "edges": [list(e) for e in self.host.sorted_edges()],
        }


def _witness(model: Graph, main: dict[int, int], paths: dict[Edge, tuple[int, ...]]) -> SubdivisionWitness:
    edges = {(min(a, b), max(a, b)) for p in paths.values() for a, b in zip(p, p[1:])}
    verts = {v for p in paths.values() for v in p} | set(main.values())
    return SubdivisionWitness(Graph.from_edges(sorted(edges), verts), model, dict(main), dict(paths))


def _assignments(g: Graph, model: Graph):
    """Injective main-vertex maps, up to the model's obvious symmetries for K_n and K_{p,q}."""
    mv = list(model.vertices)
    need = {v: len(model.adj[v]) for v in mv}
    host = [v for v in g.vertices if len(g.adj[v]) >= min(need.values(), default=0)]
    k = len(mv)
    if model.m == k * (k - 1) // 2:
        for combo in combinations(host, k):
            if all(len(g.adj[h]) >= need[m] for m, h in zip(mv, combo)):
                yield dict(zip(mv, combo))
        return
    sides = _bipartition(model)
    if sides is not None and model.m == len(sides[0]) * len(sides[1]):
        left, right = sides
        for chosen in combinations(host, len(left) + len(right)):
            for lhs in combinations(chosen, len(left)):
                if len(left) == len(right) and chosen[0] not in lhs:
                    continue
                rhs = [h for h in chosen if h not in lhs]
                yield dict(zip(left + right, list(lhs) + rhs))
        return
    for perm in permutations(host, k):
        if all(len(g.adj[h]) >= need[m] for m, h in zip(mv, perm)):
            yield dict(zip(mv, perm))


def _bipartition(model: Graph):
    side: dict[int, int] = {}
    for s in model.vertices:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in model.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    left = [v for v in model.vertices if side[v] == 0]
    right = [v for v in model.vertices if side[v] == 1]
    return left, right


def _route(g: Graph, main: dict[int, int], medges: list[Edge]) -> dict[Edge, tuple[int, ...]] | None:
    adj = g.adj
    mains = set(main.values())
    used: set[int] = set()
    chosen: dict[Edge, tuple[int, ...]] = {}

    def reachable(s: int, t: int) -> bool:
        if t in adj[s]:
            return True
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w == t:
                    return True
                if w not in seen and w not in mains and w not in used:
                    seen.add(w)
                    stack.append(w)
        return False

    def paths(s: int, t: int):
        if t in adj[s]:
            yield (s, t)
        trail = [s]
        on = {s}

        def ext(u):
            for w in sorted(adj[u]):
                if w == t and len(trail) > 1:
                    yield tuple(trail) + (t,)
                elif w not in on and w not in mains and w not in used:
                    trail.append(w)
                    on.add(w)
                    yield from ext(w)
                    trail.pop()
                    on.discard(w)

        yield from ext(s)

    def go(i: int) -> bool:
        if i == len(medges):
            return True
        for u, v in medges[i + 1:]:
            if not reachable(main[u], main[v]):
                return False
        u, v = medges[i]
        for p in paths(main[u], main[v]):
            inner = p[1:-1]
            used.update(inner)
            chosen[(u, v)] = p
            if go(i + 1):
                return True
            used.difference_update(inner)
            del chosen[(u, v)]
        return False

    if medges and not reachable(main[medges[0][0]], main[medges[0][1]]):
        return None
    return dict(chosen) if go(0) else None


def contains_subdivision(g: Graph, model: Graph, cap: int | None = BLOCK_CAP) -> SubdivisionWitness | None:
    """A subgraph of ``g`` subdividing ``model``, or None if there is none."""
    if cap is not None and g.n > cap:
        raise BudgetError(f"{g.n} vertices exceed the subdivision search cap {cap}")
    if model.n > g.n or model.m > g.m:
        return None
    medges = sorted(model.edges)
    for main in _assignments(g, model):
        routed = _route(g, main, medges)
        if routed is not None:
            return _witness(model, main, routed)
    return None


def kuratowski_witness(g: Graph, cap: int | None = BLOCK_CAP) -> SubdivisionWitness | None:
    """A K5 or K3,3 subdivision in ``g``, K3,3 tried first."""
    return contains_subdivision(g, K33, cap) or contains_subdivision(g, K5, cap)


def base_planar(g: Graph, cap: int | None = BLOCK_CAP) -> bool:
    """Euler bound, then exhaustive Kuratowski search."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.n <= 4:
        return True
    return kuratowski_witness(g, cap) is None


def realize_part_subdivision(g: Graph, tree: DecompositionTree, a) -> SubdivisionWitness:
    """Witness that ``g`` contains a subdivision of G'(A).

    Each edge ab of G'(A) missing from ``g`` is routed through the interior of
    a side of {a, b} that does not contain A.
    """
    part = tree.part(a.members if isinstance(a, Part) else a)
    model = induced(augment(g, tree.family), part.members)
    inside = set(part.members)
    paths: dict[Edge, tuple[int, ...]] = {}
    for e in model.sorted_edges():
        if g.has_edge(*e):
            paths[e] = e
            continue
        x, y = e
        far = [c for c in components(g, e) if not (set(c) & inside)]
        if not far:
            raise DomainError(f"augmented edge {e} has no side away from the part")
        paths[e] = _path_through(g, x, y, set(far[0]))
    return _witness(model, {v: v for v in model.vertices}, paths)


def _path_through(g: Graph, s: int, t: int, allowed: set[int]) -> tuple[int, ...]:
    prev = {s: None}
    queue = [s]
    for u in queue:
        for w in sorted(g.adj[u]):
            if w == t and u != s:
                out = [t, u]
                while prev[out[-1]] is not None:
                    out.append(prev[out[-1]])
                return tuple(reversed(out))
            if w in allowed and w not in prev:
                prev[w] = u
                queue.append(w)
    raise DomainError(f"no {s}-{t} path through the given side")


def lift_witness(inner: SubdivisionWitness, realization: SubdivisionWitness) -> SubdivisionWitness:
    """Compose a subdivision found in G'(A) with the realization of G'(A) inside G."""
    lifted = {}
    for e, p in inner.paths.items():
        walk = [p[0]]
        for a, b in zip(p, p[1:]):
            seg = realization.paths[(min(a, b), max(a, b))]
            if seg[0] != a:
                seg = seg[::-1]
            walk.extend(seg[1:])
        lifted[e] = tuple(walk)
    return _witness(inner.model, inner.main, lifted)


def is_planar(g: Graph, cap: int | None = BLOCK_CAP) -> bool:
    """Planarity of a biconnected graph, decided on the block parts of its tree."""
    return planarity_report(g, cap)["planar"]


def planarity_report(g: Graph, cap: int | None = BLOCK_CAP) -> dict:
    """Verdict for a biconnected graph, with a Kuratowski subdivision in ``g`` when non-planar."""
    if not is_biconnected(g):
        raise DomainError("graph is not biconnected")
    tree = bt_tree(g)
    for part in tree.parts:
        if part.kind.is_cycle:
            continue
        h = induced(augment(g, tree.family), part.members)
        if base_planar(h, cap):
            continue
        w = kuratowski_witness(h, cap)
        if w is None:
            raise InvariantViolation(f"part {part.members} fails the Euler bound yet has no Kuratowski subgraph")
        w = lift_witness(w, realize_part_subdivision(g, tree, part))
        return {"planar": False, "part": part, "witness": w}
    return {"planar": True, "part": None, "witness": None}


def planarity_general(g: Graph, cap: int | None = BLOCK_CAP) -> dict:
    """Any graph: planar iff every block is. Blocks with at most two vertices are planar."""
    comps = components(g)
    for comp in comps:
        h = induced(g, comp)
        if h.n < 3:
            continue
        bct = block_cut_tree(h)
        for block in bct.blocks:
            if len(block) < 3:
                continue
            rep = planarity_report(induced(h, block), cap)
            if not rep["planar"]:
                return {"planar": False, "block": block, "witness": rep["witness"]}
    return {"planar": True, "block": None, "witness": None}
