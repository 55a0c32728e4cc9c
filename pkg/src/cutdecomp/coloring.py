"""Level-order colorings of a biconnected graph along its decomposition tree.

Parts are colored one tree level at a time, starting from a root part. When a
part is reached, the only colored vertices in it are the two vertices of the
cutset joining it to the previous level, and the part's coloring is adapted
to those two pins. Per-part chromatic numbers come from the exact oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping

from .connectivity import Cutset
from .decomposition import DecompositionTree, Part, augment
from .errors import BudgetError, DomainError, InvariantViolation
from .graph import Graph, cycle_order, delete, induced
from .oracles import OracleBudget, oracle_chromatic, oracle_choice_number

STRATEGIES = ("augmented", "parts+1", "blocks+1", "list")
PART_CAP = 12


@dataclass(frozen=True)
class LevelOrder:
    root: Part
    level: dict = field(hash=False)
    order: tuple = ()

    def parts_in_order(self) -> list[Part]:
        return [x for x in self.order if isinstance(x, Part)]


@dataclass(frozen=True)
class ColoringCertificate:
    assignment: dict[int, int] = field(hash=False)
    bound: int
    strategy: str
    lists: dict[int, tuple[int, ...]] | None = field(default=None, hash=False)

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment.values()))

    def problems(self, g: Graph) -> list[str]:
        out = []
        if set(self.assignment) != set(g.vertices):
            out.append("assignment does not cover exactly V(G)")
        for u, v in g.sorted_edges():
            if u in self.assignment and self.assignment.get(u) == self.assignment.get(v):
                out.append(f"edge {(u, v)} is monochromatic")
        if self.lists is None and self.colors_used > self.bound:
            out.append(f"{self.colors_used} colors exceed bound {self.bound}")
        if self.lists is not None:
            # for list certificates the bound is the guaranteed list size
            short = [v for v in g.vertices if len(set(self.lists.get(v, ()))) < self.bound]
            if short:
                out.append(f"lists of {short} are shorter than {self.bound}")
            for v, c in self.assignment.items():
                if c not in self.lists.get(v, ()):
                    out.append(f"vertex {v} colored {c} outside its list")
        return out

    def verify(self, g: Graph) -> bool:
        return not self.problems(g)

    def canonical(self) -> ColoringCertificate:
        """Renumber colors by first use in vertex order. List certificates are left alone."""
        if self.lists is not None:
            return self
        ren: dict[int, int] = {}
        out = {}
        for v in sorted(self.assignment):
            c = self.assignment[v]
            ren.setdefault(c, len(ren))
            out[v] = ren[c]
        return ColoringCertificate(out, self.bound, self.strategy)

    def to_json(self) -> dict:
        d = {
            "strategy": self.strategy,
            "bound": self.bound,
            "colors_used": self.colors_used,
            "assignment": {str(v): c for v, c in sorted(self.assignment.items())},
        }
        if self.lists is not None:
            d["lists"] = {str(v): list(l) for v, l in sorted(self.lists.items())}
        return d

    @classmethod
    def from_json(cls, d: Mapping) -> ColoringCertificate:
        lists = d.get("lists")
        return cls(
            {int(v): int(c) for v, c in d["assignment"].items()},
            int(d["bound"]),
            str(d["strategy"]),
            None if lists is None else {int(v): tuple(l) for v, l in lists.items()},
        )


def _chi(h: Graph, budget: OracleBudget | None = None) -> int:
    if h.n > PART_CAP:
        raise BudgetError(f"part on {h.n} vertices exceeds the exact-coloring cap {PART_CAP}")
    return oracle_chromatic(h) if budget is None else oracle_chromatic(h, budget)


def degeneracy(h: Graph) -> int:
    deg = {v: len(h.adj[v]) for v in h.vertices}
    alive = set(h.vertices)
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in h.adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


@lru_cache(maxsize=4096)
def choice_upper(h: Graph) -> int:
    """ch(h) exactly when the oracle is within budget, else the degeneracy bound (an upper bound).

    Memoized: the exact search is exponential and the same part graphs recur.
    """
    try:
        return oracle_choice_number(h)
    except BudgetError:
        return degeneracy(h) + 1


def level_order(tree: DecompositionTree, root: Part | None = None) -> LevelOrder:
    """BFS levels from a root part; parts sit on even levels, cutsets on odd ones."""
    root = tree.root if root is None else root
    if root is None:
        raise DomainError("no root part given")
    root = tree.node(root.members if isinstance(root, Part) else root)
    if not isinstance(root, Part):
        raise DomainError("root must be a part node")
    nb = tree.neighbors()
    level = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(nb[x], key=lambda z: (z.members, isinstance(z, Part))):
            if y not in level:
                level[y] = level[x] + 1
                order.append(y)
                queue.append(y)
    return LevelOrder(root, level, tuple(order))


def part_values(g: Graph, tree: DecompositionTree, strategy: str) -> dict[Part, int]:
    """The per-part quantity whose maximum sets each strategy's bound."""
    if strategy == "augmented":
        h = augment(g, tree.family)
        return {a: _chi(induced(h, a.members)) for a in tree.parts}
    if strategy == "parts+1":
        return {a: _chi(induced(g, a.members)) for a in tree.parts}
    if strategy == "blocks+1":
        return {a: (_chi(induced(g, a.members)) if a.kind.is_block else 0) for a in tree.parts}
    if strategy == "list":
        return {a: choice_upper(induced(g, a.members)) for a in tree.parts}
    raise DomainError(f"unknown strategy {strategy!r}")


def choose_root(tree: DecompositionTree, strategy: str, values: dict[Part, int] | None = None) -> Part:
    """Part with the largest per-part value; ties go to the canonically smallest vertex set."""
    if not tree.parts:
        raise DomainError("empty tree")
    if values is None:
        values = part_values(tree.graph, tree, strategy)
    return min(tree.parts, key=lambda a: (-values[a], a.members))


def _optimal(h: Graph, k: int) -> dict[int, int]:
    """A proper coloring of h with colors 0..k-1 (k at least chi(h))."""
    order = sorted(h.vertices, key=lambda v: (-len(h.adj[v]), v))
    color: dict[int, int] = {}

    def go(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        banned = {color[w] for w in h.adj[v] if w in color}
        for c in range(min(used + 1, k)):
            if c not in banned:
                color[v] = c
                if go(i + 1, max(used, c + 1)):
                    return True
                del color[v]
        return False

    if not go(0, 0):
        raise InvariantViolation(f"no {k}-coloring found for a graph of chromatic number <= {k}")
    return color


def _permute_onto(local: dict[int, int], pins: dict[int, int], palette: list[int]) -> dict[int, int]:
    """Rename local color classes so pinned vertices get their pinned colors."""
    ren: dict[int, int] = {}
    for v, c in pins.items():
        lc = local[v]
        if ren.get(lc, c) != c:
            raise InvariantViolation("pins demand two colors for one class")
        ren[lc] = c
    spare = [c for c in palette if c not in ren.values()]
    for lc in sorted(set(local.values())):
        if lc not in ren:
            if not spare:
                raise InvariantViolation("palette exhausted while renaming classes")
            ren[lc] = spare.pop(0)
    return {v: ren[c] for v, c in local.items()}


def _parent_cutset(lo: LevelOrder, tree: DecompositionTree, a: Part) -> Cutset:
    nb = tree.neighbors()
    ups = [s for s in nb[a] if lo.level[s] == lo.level[a] - 1]
    if len(ups) != 1:
        raise InvariantViolation(f"part {a} has {len(ups)} parents")
    return ups[0]


def _commit(coloring: dict[int, int], a: Part, pinned: tuple[int, ...], new: dict[int, int]) -> None:
    for v in a.members:
        if v in pinned:
            continue
        if v in coloring:
            raise InvariantViolation(f"vertex {v} of part {a.members} colored before its part")
        coloring[v] = new[v]


def _walk(tree: DecompositionTree,
          color_root: Callable[[Part], dict[int, int]],
          color_part: Callable[[Part, Cutset, dict[int, int]], dict[int, int]],
          root: Part) -> dict[int, int]:
    lo = level_order(tree, root)
    coloring = dict(color_root(lo.root))
    for a in lo.parts_in_order()[1:]:
        s = _parent_cutset(lo, tree, a)
        new = color_part(a, s, coloring)
        _commit(coloring, a, s.members, new)
    return coloring


def color_via_augmented(g: Graph, tree: DecompositionTree) -> ColoringCertificate:
    """Color G' (hence G) with k = max over parts of chi(G'(A)) colors."""
    values = part_values(g, tree, "augmented")
    k = max(values.values())
    h = augment(g, tree.family)
    palette = list(range(k))

    def root_col(a: Part):
        return _optimal(induced(h, a.members), k)

    def part_col(a: Part, s: Cutset, col: dict[int, int]):
        x, y = s.members
        if col[x] == col[y]:
            raise InvariantViolation(f"cutset {s} pinned to one color in G'")
        local = _optimal(induced(h, a.members), values[a])
        return _permute_onto(local, {x: col[x], y: col[y]}, palette)

    root = choose_root(tree, "augmented", values)
    col = _walk(tree, root_col, part_col, root)
    return ColoringCertificate(col, k, "augmented")


def _plus_one_part(g: Graph, a: Part, s: Cutset, col: dict[int, int], m: int) -> dict[int, int]:
    """Extend to part A using m + 1 colors 0..m, given the colors of S = {a, b}."""
    x, y = s.members
    i, j = col[x], col[y]
    ga = induced(g, a.members)
    if i == j:
        rest = delete(ga, [x, y])
        palette = [c for c in range(m + 1) if c != i]
        local = _optimal(rest, m)
        return _permute_onto(local, {}, palette)
    rest = delete(ga, [y])
    palette = [c for c in range(m + 1) if c != j]
    local = _optimal(rest, m)
    return _permute_onto(local, {x: i}, palette)


def color_parts_plus_one(g: Graph, tree: DecompositionTree) -> ColoringCertificate:
    """Color G with max over parts of chi(G(A)) + 1 colors."""
    values = part_values(g, tree, "parts+1")
    m = max(values.values())
    root = choose_root(tree, "parts+1", values)

    def root_col(a: Part):
        return _optimal(induced(g, a.members), values[a])

    col = _walk(tree, root_col,
                lambda a, s, c: _plus_one_part(g, a, s, c, m), root)
    return ColoringCertificate(col, m + 1, "parts+1")


def _greedy_cycle(g: Graph, h: Graph, a: Part, col: dict[int, int],
                  choices: Callable[[int], list[int]], start: tuple[int, int] | None) -> dict[int, int]:
    """Color the uncolored vertices of a cycle part in cycle order.

    ``start`` = (x, y) walks from x away from y; each vertex then has at most two
    colored neighbors, its predecessor and possibly y.
    """
    ring = cycle_order(induced(h, a.members))
    if start is not None:
        x, y = start
        i = ring.index(x)
        ring = ring[i:] + ring[:i]
        if ring[1] == y:
            ring = [ring[0]] + ring[1:][::-1]
    local = {v: col[v] for v in (start or ()) if v in col}
    for v in ring:
        if v in local:
            continue
        taken = {local.get(w, col.get(w)) for w in g.adj[v]} - {None}
        free = [c for c in choices(v) if c not in taken]
        if not free:
            raise InvariantViolation(f"no color left for cycle vertex {v}")
        local[v] = free[0]
    return local


def color_blocks_plus_one(g: Graph, tree: DecompositionTree) -> ColoringCertificate:
    """Color G with max(3, max over block parts of chi(G(A)) + 1) colors."""
    values = part_values(g, tree, "blocks+1")
    bound = max(3, max(values.values()) + 1)
    h = augment(g, tree.family)
    root = choose_root(tree, "blocks+1", values)
    palette = list(range(bound))

    def root_col(a: Part):
        if a.kind.is_cycle:
            return _greedy_cycle(g, h, a, {}, lambda v: palette[:3], None)
        return _optimal(induced(g, a.members), values[a])

    def part_col(a: Part, s: Cutset, col: dict[int, int]):
        if a.kind.is_cycle:
            return _greedy_cycle(g, h, a, col, lambda v: palette[:3], s.members)
        return _plus_one_part(g, a, s, col, bound - 1)

    col = _walk(tree, root_col, part_col, root)
    return ColoringCertificate(col, bound, "blocks+1")


def list_bound(g: Graph, tree: DecompositionTree, statement: int = 1) -> int:
    """List size sufficient for :func:`list_color`.

    Statement 1: max over parts of ch(G(A)) + 2. Statement 2: max(3, max over
    block parts of ch(G(A)) + 2). ch is exact where the oracle is in budget and
    the degeneracy + 1 upper bound elsewhere.
    """
    vals = part_values(g, tree, "list")
    if statement == 1:
        return max(vals.values()) + 2
    if statement == 2:
        blocks = [v for a, v in vals.items() if a.kind.is_block]
        return max([3] + [v + 2 for v in blocks])
    raise DomainError("statement must be 1 or 2")


def _list_search(h: Graph, lists: dict[int, list[int]]) -> dict[int, int] | None:
    color: dict[int, int] = {}
    verts = list(h.vertices)

    def go() -> bool:
        todo = [v for v in verts if v not in color]
        if not todo:
            return True
        v = min(todo, key=lambda u: (len([c for c in lists[u]
                                          if c not in {color.get(w) for w in h.adj[u]}]), u))
        taken = {color.get(w) for w in h.adj[v]}
        for c in lists[v]:
            if c not in taken:
                color[v] = c
                if go():
                    return True
                del color[v]
        return False

    return dict(color) if go() else None


def list_color(g: Graph, tree: DecompositionTree, lists: Mapping[int, list[int]],
               statement: int = 1) -> ColoringCertificate:
    """Color every vertex from its own list, level by level.

    In each new part the two cutset colors are erased from the other vertices'
    lists before the rest of the part is list-colored; under statement 2 cycle
    parts are completed greedily.
    """
    need = list_bound(g, tree, statement)
    if set(lists) != set(g.vertices):
        raise DomainError("lists must cover exactly V(G)")
    short = [v for v in g.vertices if len(set(lists[v])) < need]
    if short:
        raise DomainError(f"lists of vertices {short} are shorter than {need}")
    lists = {v: sorted(set(lists[v])) for v in g.vertices}
    values = part_values(g, tree, "list")
    root = choose_root(tree, "list", values)
    h = augment(g, tree.family)
    cyc = statement == 2

    def root_col(a: Part):
        if cyc and a.kind.is_cycle:
            return _greedy_cycle(g, h, a, {}, lambda v: lists[v], None)
        got = _list_search(induced(g, a.members), lists)
        if got is None:
            raise InvariantViolation(f"root part {a.members} not list-colorable")
        return got

    def part_col(a: Part, s: Cutset, col: dict[int, int]):
        if cyc and a.kind.is_cycle:
            return _greedy_cycle(g, h, a, col, lambda v: lists[v], s.members)
        gone = {col[x] for x in s.members}
        rest = delete(induced(g, a.members), s.members)
        reduced = {v: [c for c in lists[v] if c not in gone] for v in rest.vertices}
        got = _list_search(rest, reduced)
        if got is None:
            raise InvariantViolation(f"part {a.members} not list-colorable after erasing {gone}")
        return got

    col = _walk(tree, root_col, part_col, root)
    return ColoringCertificate(col, need, "list", {v: tuple(l) for v, l in lists.items()})
