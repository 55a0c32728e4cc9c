"""Vertex cutsets: enumeration, separation and splitting, independence, single cutsets.

Everything here is exhaustive over vertex subsets, which keeps it obviously
correct at the sizes this package targets. Enumeration warns above
``SOFT_CAP`` vertices.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError
from .graph import Graph, VertexSet, components, is_connected, vset

log = logging.getLogger(__name__)

SOFT_CAP = 64


@dataclass(frozen=True, order=True)
class Cutset:
    members: VertexSet

    @property
    def k(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class CutsetFamily:
    """Sorted, duplicate-free cutsets of one size.

    ``independent`` is only set by :func:`verify_family` or :func:`single_cutsets`.
    """

    cutsets: tuple[Cutset, ...]
    k: int
    independent: bool = False

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]], k: int | None = None) -> CutsetFamily:
        cuts = sorted({Cutset(vset(s)) for s in sets})
        sizes = {c.k for c in cuts}
        if len(sizes) > 1:
            raise DomainError(f"cutsets of mixed sizes {sorted(sizes)}")
        if k is None:
            if not cuts:
                raise DomainError("k is required for an empty family")
            k = cuts[0].k
        elif sizes and sizes != {k}:
            raise DomainError(f"expected {k}-element cutsets")
        return cls(tuple(cuts), k)

    def __iter__(self) -> Iterator[Cutset]:
        return iter(self.cutsets)

    def __len__(self) -> int:
        return len(self.cutsets)

    def __contains__(self, item) -> bool:
        if not isinstance(item, Cutset):
            item = Cutset(vset(item))
        return item in self.cutsets

    def members(self) -> list[VertexSet]:
        return [c.members for c in self.cutsets]


def _as_set(x) -> VertexSet:
    if isinstance(x, Cutset):
        return x.members
    return vset(x)


def is_cutset(g: Graph, r) -> bool:
    return len(components(g, _as_set(r))) >= 2


def enumerate_cutsets(g: Graph, k: int) -> CutsetFamily:
    """All k-vertex cutsets of a connected graph, for k in {1, 2}."""
    if k not in (1, 2):
        raise DomainError(f"k={k} unsupported; use oracles.oracle_cutsets for general k")
    if not is_connected(g):
        raise DomainError("graph is not connected")
    if g.n <= k:
        raise DomainError(f"need more than {k} vertices")
    if g.n > SOFT_CAP:
        warnings.warn(f"exhaustive cutset enumeration on {g.n} vertices", stacklevel=2)
    found = [s for s in combinations(g.vertices, k) if len(components(g, s)) >= 2]
    return CutsetFamily(tuple(Cutset(s) for s in found), k)


def _component_index(g: Graph, r: VertexSet) -> dict[int, int]:
    label = {}
    for i, comp in enumerate(components(g, r)):
        for v in comp:
            label[v] = i
    return label


def separates(g: Graph, r, x: Iterable[int], y: Iterable[int]) -> bool:
    """True iff no component of G - R meets both X \\ R and Y \\ R."""
    r, x, y = _as_set(r), vset(x), vset(y)
    rs = set(r)
    if set(x) <= rs or set(y) <= rs:
        raise DomainError("X and Y must not be contained in R")
    label = _component_index(g, r)
    xs = {label[v] for v in x if v not in rs}
    ys = {label[v] for v in y if v not in rs}
    return not (xs & ys)


def splits(g: Graph, r, x: Iterable[int]) -> bool:
    """True iff X \\ R meets at least two components of G - R."""
    r, x = _as_set(r), vset(x)
    rest = [v for v in x if v not in set(r)]
    if not rest:
        raise DomainError("X is contained in R")
    label = _component_index(g, r)
    return len({label[v] for v in rest}) > 1


def is_k_connected(g: Graph, k: int) -> bool:
    """v(G) > k and no cutset with fewer than k vertices (empty set included)."""
    if g.n <= k:
        return False
    for size in range(k):
        for s in combinations(g.vertices, size):
            if len(components(g, s)) != 1:
                return False
    return True


def is_biconnected(g: Graph) -> bool:
    return is_k_connected(g, 2)


def split_pair(g: Graph, s, t) -> tuple[bool, bool]:
    """(S splits T, T splits S). The two agree for equal-size cutsets of a k-connected graph."""
    s, t = _as_set(s), _as_set(t)
    return splits(g, s, t), splits(g, t, s)


def _require_cutset(g: Graph, s: VertexSet) -> None:
    if not is_cutset(g, s):
        raise DomainError(f"{s} is not a cutset")


def independent(g: Graph, s, t) -> bool:
    s, t = _as_set(s), _as_set(t)
    if s == t:
        raise DomainError("cutsets must be distinct")
    _require_cutset(g, s)
    _require_cutset(g, t)
    a, b = split_pair(g, s, t)
    return not a and not b


def verify_family(g: Graph, family: CutsetFamily) -> CutsetFamily:
    """Check every member is a k-cutset of ``g`` and the members are pairwise independent.

    Returns the family flagged as independent.
    """
    for c in family:
        if c.k != family.k:
            raise DomainError(f"{c} has size {c.k}, expected {family.k}")
        _require_cutset(g, c.members)
    for s, t in combinations(family.cutsets, 2):
        if not independent(g, s, t):
            raise DomainError(f"cutsets {s} and {t} are dependent")
    return CutsetFamily(family.cutsets, family.k, True)


def single_cutsets(g: Graph) -> CutsetFamily:
    """2-cutsets independent of every other 2-cutset of a biconnected graph."""
    if not is_biconnected(g):
        raise DomainError("graph is not biconnected")
    all2 = enumerate_cutsets(g, 2).cutsets
    dependent: set[Cutset] = set()
    for s, t in combinations(all2, 2):
        if any(split_pair(g, s, t)):
            dependent.update((s, t))
    return CutsetFamily(tuple(c for c in all2 if c not in dependent), 2, True)
