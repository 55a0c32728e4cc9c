"""Seeded test corpus: random biconnected graphs plus the named small examples."""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Iterator

from . import families as F
from .critical import generate_critical_chain
from .graph import Graph
from .oracles import oracle_biconnected, oracle_critical, random_biconnected

DENSITIES = (0.0, 0.05, 0.1, 0.2, 0.35, 0.6)


def random_corpus(count: int = 600, n_min: int = 4, n_max: int = 10, seed: int = 0) -> list[Graph]:
    """``count`` graphs cycling through sizes n_min..n_max and the densities above."""
    span = n_max - n_min + 1
    return [
        random_biconnected(n_min + i % span, DENSITIES[(i // span) % len(DENSITIES)], seed + i)
        for i in range(count)
    ]


def named_graphs() -> dict[str, Graph]:
    out = {
        "theta": F.theta(),
        "two_k4": F.two_k4(),
        "k4_chain": F.k4_chain(),
        "petersen": F.petersen(),
        "k4": F.complete(4),
        "k5": F.complete(5),
        "k33": F.complete_bipartite(3, 3),
        "chain_block4": generate_critical_chain(["block4"]),
        "chain_tri_c4": generate_critical_chain(["triangle", "cycle4"]),
    }
    for n in range(4, 11):
        out[f"c{n}"] = F.cycle(n)
    return out


def standard_corpus(count: int = 600) -> list[Graph]:
    return random_corpus(count) + list(named_graphs().values())


def _canonical(h: int, edges: frozenset) -> tuple:
    """Brute-force canonical form of a graph on vertices 0..h-1 (fine for h <= 5)."""
    best = None
    for perm in permutations(range(h)):
        key = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def _cores(h: int) -> list[frozenset]:
    """Graphs on 0..h-1 up to isomorphism."""
    pairs = list(combinations(range(h), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        es = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        seen.setdefault(_canonical(h, es), es)
    return [seen[k] for k in sorted(seen)]


# graphs on the four degree-2 vertices that can occur in a connected graph with
# vertices of higher degree: max degree 2, no cycle (a cycle would be a component)
_D_GRAPHS = (
    (),
    ((0, 1),),
    ((0, 1), (2, 3)),
    ((0, 1), (1, 2)),
    ((0, 1), (1, 2), (2, 3)),
)


def critical_four_graphs(max_n: int = 9) -> Iterator[Graph]:
    """Every critical biconnected graph with exactly four degree-2 vertices and n <= max_n.

    Graphs are produced per isomorphism class of the high-degree core, so a
    class may appear more than once but none is missed. The four degree-2
    vertices get ids h..h+3 above the h core vertices.
    """
    yield Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])
    for n in range(5, max_n + 1):
        h = n - 4
        for core in _cores(h):
            core_deg = [0] * h
            for u, v in core:
                core_deg[u] += 1
                core_deg[v] += 1
            for dg in _D_GRAPHS:
                ddeg = [0] * 4
                for u, v in dg:
                    ddeg[u] += 1
                    ddeg[v] += 1
                choices = [list(combinations(range(h), 2 - ddeg[i])) for i in range(4)]
                for pick in product(*choices):
                    deg = core_deg[:]
                    for nbrs in pick:
                        for x in nbrs:
                            deg[x] += 1
                    if min(deg) < 3:
                        continue
                    edges = set(core)
                    edges.update((u + h, v + h) for u, v in dg)
                    edges.update((x, h + i) for i, nbrs in enumerate(pick) for x in nbrs)
                    g = Graph.from_edges(sorted(edges), range(n))
                    if oracle_biconnected(g) and oracle_critical(g):
                        yield g
