"""Brute-force ground truth for the constructive modules.

Nothing here imports connectivity, decomposition, coloring or critical. Graphs
are converted to bitmask adjacency and traversed by local code, so agreement
between an oracle and the module it checks is independent evidence.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetError, DomainError
from .graph import Graph


@dataclass(frozen=True)
class OracleBudget:
    parts_vertices: int = 12
    chromatic_vertices: int = 12
    choosable_vertices: int = 6
    choosable_k: int = 3
    choosable_assignments: int = 300_000
    cutset_subsets: int = 200_000
    time_limit: float | None = 30.0

    def __post_init__(self):
        for name in ("parts_vertices", "chromatic_vertices", "choosable_vertices",
                     "choosable_k", "choosable_assignments", "cutset_subsets"):
            if getattr(self, name) <= 0:
                raise DomainError(f"budget {name} must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise DomainError("time_limit must be positive")


DEFAULT_BUDGET = OracleBudget()


class _Deadline:
    def __init__(self, budget: OracleBudget):
        self.end = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.ticks = 0

    def check(self):
        self.ticks += 1
        if self.end is not None and self.ticks % 4096 == 0 and time.monotonic() > self.end:
            raise BudgetError("oracle time limit exceeded")


class _Bits:
    """Bitmask view of a graph: vertex i of the mask is g.vertices[i]."""

    def __init__(self, g: Graph):
        self.ids = list(g.vertices)
        index = {v: i for i, v in enumerate(self.ids)}
        self.n = len(self.ids)
        self.nb = [0] * self.n
        for u, v in g.edges:
            i, j = index[u], index[v]
            self.nb[i] |= 1 << j
            self.nb[j] |= 1 << i
        self.full = (1 << self.n) - 1
        self.index = index

    def mask(self, vs) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index[v]
        return m

    def unmask(self, m: int) -> tuple[int, ...]:
        return tuple(self.ids[i] for i in range(self.n) if m >> i & 1)

    def reach(self, start: int, allowed: int) -> int:
        """Vertices reachable from bit ``start`` inside ``allowed``."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.nb[low.bit_length() - 1]
                f ^= low
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def comps(self, allowed: int) -> list[int]:
        out = []
        rest = allowed
        while rest:
            low = rest & -rest
            c = self.reach(low.bit_length() - 1, allowed)
            out.append(c)
            rest &= ~c
        return out

    def connected(self, allowed: int) -> bool:
        return allowed != 0 and len(self.comps(allowed)) == 1

    def biconnected(self, allowed: int) -> bool:
        if bin(allowed).count("1") < 3 or not self.connected(allowed):
            return False
        m = allowed
        while m:
            low = m & -m
            if not self.connected(allowed & ~low):
                return False
            m ^= low
        return True


def oracle_cutsets(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All k-subsets whose removal disconnects ``g``, sorted."""
    bits = _Bits(g)
    if k < 0 or k >= bits.n:
        return []
    from math import comb

    if comb(bits.n, k) > budget.cutset_subsets:
        raise BudgetError(f"{comb(bits.n, k)} subsets exceed the cutset budget")
    out = []
    for sub in combinations(range(bits.n), k):
        m = 0
        for i in sub:
            m |= 1 << i
        if len(bits.comps(bits.full & ~m)) >= 2:
            out.append(tuple(bits.ids[i] for i in sub))
    return sorted(out)


def oracle_parts(g: Graph, family, budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Every vertex set satisfying the part definition verbatim, found by enumerating all subsets.

    A qualifies when no family cutset splits it and each vertex outside it is
    separated from it by some family cutset.
    """
    bits = _Bits(g)
    if bits.n > budget.parts_vertices:
        raise BudgetError(f"{bits.n} vertices exceed the parts budget")
    cuts = [bits.mask(c) for c in family]
    labels = []
    for t in cuts:
        comp_masks = bits.comps(bits.full & ~t)
        labels.append((t, comp_masks))
    deadline = _Deadline(budget)
    out = []
    for a in range(1, bits.full + 1):
        deadline.check()
        ok = True
        for t, comp_masks in labels:
            rest = a & ~t
            if rest and not any(rest & c == rest for c in comp_masks):
                ok = False
                break
        if not ok:
            continue
        outside = bits.full & ~a
        while outside and ok:
            low = outside & -outside
            outside ^= low
            found = False
            for t, comp_masks in labels:
                if low & t or a & ~t == 0:
                    continue
                home = next(c for c in comp_masks if c & low)
                if not (home & a & ~t):
                    found = True
                    break
            ok = found
        if ok:
            out.append(bits.unmask(a))
    return sorted(out)


def _colorable(bits: _Bits, k: int, deadline: _Deadline) -> bool:
    n = bits.n
    order = sorted(range(n), key=lambda i: -bin(bits.nb[i]).count("1"))
    color = [-1] * n

    def go(pos: int, used: int) -> bool:
        if pos == n:
            return True
        deadline.check()
        v = order[pos]
        banned = set()
        m = bits.nb[v]
        while m:
            low = m & -m
            c = color[low.bit_length() - 1]
            if c >= 0:
                banned.add(c)
            m ^= low
        # new colors are interchangeable: try at most one unused color
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            color[v] = c
            if go(pos + 1, max(used, c + 1)):
                return True
        color[v] = -1
        return False

    return go(0, 0)


def oracle_chromatic(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact chromatic number by trying k = 1, 2, ... with a backtracking colorer."""
    bits = _Bits(g)
    if bits.n > budget.chromatic_vertices:
        raise BudgetError(f"{bits.n} vertices exceed the chromatic budget")
    if bits.n == 0:
        return 0
    deadline = _Deadline(budget)
    k = 1 if g.m == 0 else 2
    while not _colorable(bits, k, deadline):
        k += 1
    return k


def _peel(bits: _Bits, k: int) -> int:
    """Remove vertices of degree < k until none remain. Such vertices can always be colored last."""
    alive = bits.full
    changed = True
    while changed:
        changed = False
        m = alive
        while m:
            low = m & -m
            m ^= low
            i = low.bit_length() - 1
            if bin(bits.nb[i] & alive).count("1") < k:
                alive &= ~low
                changed = True
    return alive


def _list_colorable(nbs: list[int], lists: list[tuple[int, ...]]) -> bool:
    n = len(nbs)
    color = [-1] * n
    order = sorted(range(n), key=lambda i: len(lists[i]))

    def go(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        taken = {color[j] for j in range(n) if nbs[v] >> j & 1 and color[j] >= 0}
        for c in lists[v]:
            if c not in taken:
                color[v] = c
                if go(pos + 1):
                    return True
        color[v] = -1
        return False

    return go(0)


def oracle_choosable(g: Graph, k: int, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Exact k-choosability by enumerating list assignments up to renaming of colors.

    Lists draw from a universe of k * v(g) colors; each new list may only use
    fresh colors in increasing order, which removes color-permutation symmetry.
    Vertices of degree below k are peeled off first.
    """
    if k <= 0:
        return g.n == 0
    bits = _Bits(g)
    core = _peel(bits, k)
    if core == 0:
        return True
    sub = induced_bits(bits, core)
    if k < oracle_chromatic(_graph_of(sub), budget):
        return False
    n = sub.n
    if n > budget.choosable_vertices or k > budget.choosable_k:
        raise BudgetError(f"choosability core has {n} vertices at k={k}; outside budget")
    deadline = _Deadline(budget)
    counter = [0]
    lists: list[tuple[int, ...]] = []

    def go(i: int, pool: int) -> bool:
        if i == n:
            counter[0] += 1
            if counter[0] > budget.choosable_assignments:
                raise BudgetError("choosability enumeration exceeded its assignment budget")
            return _list_colorable(sub.nb, lists)
        deadline.check()
        for old in range(k + 1):
            fresh = k - old
            for chosen in combinations(range(pool), old):
                lst = chosen + tuple(range(pool, pool + fresh))
                lists.append(lst)
                ok = go(i + 1, pool + fresh)
                lists.pop()
                if not ok:
                    return False
        return True

    return go(0, 0)


def induced_bits(bits: _Bits, alive: int) -> _Bits:
    keep = [i for i in range(bits.n) if alive >> i & 1]
    g = Graph.from_edges(
        [(bits.ids[i], bits.ids[j]) for i in keep for j in keep if i < j and bits.nb[i] >> j & 1],
        [bits.ids[i] for i in keep],
    )
    return _Bits(g)


def _graph_of(bits: _Bits) -> Graph:
    return Graph.from_edges(
        [(bits.ids[i], bits.ids[j]) for i in range(bits.n) for j in range(i + 1, bits.n)
         if bits.nb[i] >> j & 1],
        bits.ids,
    )


def oracle_choice_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest k with ``g`` k-choosable. Raises BudgetError when the search is out of scope."""
    if g.n == 0:
        return 0
    k = 1
    while not oracle_choosable(g, k, budget):
        k += 1
    return k


def oracle_biconnected(g: Graph) -> bool:
    bits = _Bits(g)
    return bits.biconnected(bits.full)


def oracle_critical(g: Graph) -> bool:
    """For every vertex x, G - x is not biconnected."""
    bits = _Bits(g)
    if bits.n < 4 or not bits.biconnected(bits.full):
        raise DomainError("oracle_critical needs a biconnected graph on at least 4 vertices")
    return all(not bits.biconnected(bits.full & ~(1 << i)) for i in range(bits.n))


def random_biconnected(n: int, density: float = 0.2, seed: int = 0) -> Graph:
    """Seeded biconnected graph on vertices 0..n-1, grown by ear additions.

    Starts from a random cycle, attaches open ears (paths between two distinct
    existing vertices through new vertices) until every vertex is used, then
    adds each remaining pair as a chord with probability ``density``.
    """
    if n < 3:
        raise DomainError("need n >= 3")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    c = rng.randint(3, n)
    edges: set[tuple[int, int]] = set()

    def add(u, v):
        edges.add((min(u, v), max(u, v)))

    ring = order[:c]
    for u, v in zip(ring, ring[1:] + ring[:1]):
        add(u, v)
    used = list(ring)
    pos = c
    while pos < n:
        length = rng.randint(1, n - pos)
        inner = order[pos:pos + length]
        pos += length
        a, b = rng.sample(used, 2)
        chain = [a, *inner, b]
        for u, v in zip(chain, chain[1:]):
            add(u, v)
        used.extend(inner)
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < density:
            edges.add((u, v))
    return Graph.from_edges(sorted(edges), range(n))
