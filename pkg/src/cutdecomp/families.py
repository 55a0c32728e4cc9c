"""Small named graphs used as fixtures, CLI samples and oracle checks."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

# theta graph vertex names: hubs a, b joined through x, y, z
THETA_A, THETA_B, THETA_X, THETA_Y, THETA_Z = 0, 1, 2, 3, 4


def cycle(n: int, start: int = 0) -> Graph:
    vs = list(range(start, start + n))
    return Graph.from_edges(zip(vs, vs[1:] + vs[:1]), vs)


def path(n: int) -> Graph:
    return Graph.from_edges(zip(range(n - 1), range(1, n)), range(n))


def complete(n: int) -> Graph:
    return Graph.from_edges(combinations(range(n), 2), range(n))


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(((i, p + j) for i in range(p) for j in range(q)), range(p + q))


def theta() -> Graph:
    a, b = THETA_A, THETA_B
    return Graph.from_edges(
        [(a, THETA_X), (THETA_X, b), (a, THETA_Y), (THETA_Y, b), (a, THETA_Z), (THETA_Z, b)]
    )


def two_k4() -> Graph:
    """Two copies of K4 sharing the edge {0, 1}."""
    edges = set(combinations((0, 1, 2, 3), 2)) | set(combinations((0, 1, 4, 5), 2))
    return Graph.from_edges(sorted(edges))


def k4_chain() -> Graph:
    """Three K4 vertex sets glued along {2,3} and {4,5}, with the shared pairs left unjoined.

    The middle part's augmented graph is K4 while the host only holds a 4-cycle
    on it, so two of its edges have to be routed through the outer parts.
    """
    edges: set[tuple[int, int]] = set()
    for quad in ((0, 1, 2, 3), (2, 3, 4, 5), (4, 5, 6, 7)):
        edges |= set(combinations(quad, 2))
    edges -= {(2, 3), (4, 5)}
    return Graph.from_edges(sorted(edges))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(outer + inner + spokes)


def glue(g: Graph, h: Graph, pairs: dict[int, int]) -> Graph:
    """Disjoint union of ``g`` and ``h`` with h-vertex ``k`` identified with g-vertex ``pairs[k]``.

    Unidentified h-vertices are shifted above max(V(g)).
    """
    base = max(g.vertices) + 1 if g.vertices else 0
    mapping = {}
    nxt = base
    for v in h.vertices:
        if v in pairs:
            mapping[v] = pairs[v]
        else:
            mapping[v] = nxt
            nxt += 1
    edges = set(g.edges)
    for u, v in h.edges:
        a, b = mapping[u], mapping[v]
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(sorted(edges), set(g.vertices) | set(mapping.values()))
