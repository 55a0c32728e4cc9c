"""Immutable simple graphs and the surgery operations used throughout.

Vertex ids are caller-chosen nonnegative integers. They are never renumbered:
``induced`` and ``delete`` keep the ids of surviving vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import DomainError

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


def vset(items: Iterable[int]) -> VertexSet:
    """Canonical sorted, duplicate-free vertex tuple."""
    return tuple(sorted(set(items)))


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: VertexSet
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        vs = self.vertices
        if any(not isinstance(v, int) or v < 0 for v in vs):
            raise DomainError("vertex ids must be nonnegative integers")
        if list(vs) != sorted(set(vs)):
            raise DomainError("vertices must be sorted and duplicate-free")
        members = set(vs)
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if u > v:
                raise DomainError(f"edge {(u, v)} not in canonical (min, max) order")
            if u not in members or v not in members:
                raise DomainError(f"edge {(u, v)} has an endpoint outside the vertex set")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
        """Build a graph, rejecting loops and repeated edges."""
        seen: set[Edge] = set()
        verts = set(vertices)
        for u, v in edges:
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            e = _edge(u, v)
            if e in seen:
                raise DomainError(f"duplicate edge {e}")
            seen.add(e)
            verts.update(e)
        return cls(vset(verts), frozenset(seen))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _check_vertices(g: Graph, vs: Iterable[int]) -> None:
    members = g.adj
    for v in vs:
        if v not in members:
            raise DomainError(f"unknown vertex {v}")


def delete(g: Graph, r: Iterable[int | tuple[int, int]]) -> Graph:
    """G - R: drop listed vertices and edges, plus edges incident to dropped vertices.

    ``r`` may mix vertex ids and 2-tuples naming edges.
    """
    gone_v: set[int] = set()
    gone_e: set[Edge] = set()
    for item in r:
        if isinstance(item, tuple):
            e = _edge(*item)
            if e not in g.edges:
                raise DomainError(f"unknown edge {item}")
            gone_e.add(e)
        else:
            _check_vertices(g, (item,))
            gone_v.add(item)
    edges = frozenset(
        e for e in g.edges if e not in gone_e and e[0] not in gone_v and e[1] not in gone_v
    )
    return Graph(tuple(v for v in g.vertices if v not in gone_v), edges)


def add_edge(g: Graph, x: int, y: int) -> Graph:
    """G + xy for a non-edge xy."""
    _check_vertices(g, (x, y))
    if x == y:
        raise DomainError(f"loop at vertex {x}")
    if g.has_edge(x, y):
        raise DomainError(f"edge {_edge(x, y)} already present")
    return Graph(g.vertices, g.edges | {_edge(x, y)})


def add_edges(g: Graph, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Add every listed pair that is not already an edge."""
    new = {_edge(u, v) for u, v in pairs}
    _check_vertices(g, {v for e in new for v in e})
    if any(u == v for u, v in new):
        raise DomainError("loop requested")
    return Graph(g.vertices, g.edges | new)


def induced(g: Graph, a: Iterable[int]) -> Graph:
    """G(A): the subgraph induced on ``a``."""
    keep = set(a)
    _check_vertices(g, keep)
    return Graph(vset(keep), frozenset(e for e in g.edges if e[0] in keep and e[1] in keep))


def components(g: Graph, without: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of G - without, each sorted, ordered by smallest member."""
    removed = set(without)
    _check_vertices(g, removed)
    adj = g.adj
    seen = set(removed)
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def degree(g: Graph, v: int) -> int:
    _check_vertices(g, (v,))
    return len(g.adj[v])


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertices(g, (v,))
    return vset(g.adj[v])


def degree2_vertices(g: Graph) -> VertexSet:
    return tuple(v for v in g.vertices if len(g.adj[v]) == 2)


def is_simple_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(len(g.adj[v]) == 2 for v in g.vertices) and is_connected(g)


def cycle_order(g: Graph) -> list[int]:
    """Vertices of a simple cycle in traversal order, starting from the smallest id."""
    if not is_simple_cycle(g):
        raise DomainError("graph is not a simple cycle")
    start = g.vertices[0]
    order = [start]
    prev, cur = start, min(g.adj[start])
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(w for w in g.adj[cur] if w != prev)
    return order
