import networkx as nx
import pytest
from hypothesis import given

from cutdecomp import families as F
from cutdecomp.connectivity import CutsetFamily, enumerate_cutsets, is_k_connected, single_cutsets
from cutdecomp.decomposition import (
    BLOCK,
    Cycle,
    augment,
    block_cut_tree,
    bt_tree,
    classify_part,
    decomposition_tree,
    enumerate_k1_tree,
    graph_separation,
    nonsingle_from_cycles,
    part_sides,
    parts,
    tree_separation,
)
from cutdecomp.errors import DomainError
from cutdecomp.graph import Graph, components, degree, delete, induced
from cutdecomp.oracles import oracle_parts

from conftest import biconnected_graphs

A, B, X, Y, Z = F.THETA_A, F.THETA_B, F.THETA_X, F.THETA_Y, F.THETA_Z


def test_theta_parts():
    ps = parts(F.theta(), single_cutsets(F.theta()))
    assert [p.members for p in ps] == [(A, B, X), (A, B, Y), (A, B, Z)]
    assert [p.interior for p in ps] == [(X,), (Y,), (Z,)]


def test_empty_family_gives_whole_graph():
    g = F.petersen()
    (p,) = parts(g, CutsetFamily.of([], 2))
    assert p.members == g.vertices == p.interior


def test_two_k4_parts():
    ps = parts(F.two_k4(), single_cutsets(F.two_k4()))
    assert [len(p) for p in ps] == [4, 4]
    assert [len(p.interior) for p in ps] == [2, 2]


def test_parts_preconditions():
    with pytest.raises(DomainError):
        parts(F.cycle(4), CutsetFamily.of([(0, 2), (1, 3)], 2))
    with pytest.raises(DomainError):
        parts(F.path(4), CutsetFamily.of([(1, 2)], 2))


def test_augment_examples():
    g = F.theta()
    assert augment(g, []) == g
    assert set(augment(g, single_cutsets(g)).edges) == set(g.edges) | {(A, B)}
    assert augment(F.two_k4(), single_cutsets(F.two_k4())) == F.two_k4()


def test_tree_shapes():
    t = bt_tree(F.theta())
    assert t.degree(t.cutsets[0]) == 3 and len(t.leaves()) == 3
    t = bt_tree(F.complete(4))
    assert len(t.parts) == 1 and not t.edges
    t = bt_tree(F.two_k4())
    assert len(t.parts) == 2 and len(t.edges) == 2


def test_classification_examples():
    assert [p.kind for p in bt_tree(F.cycle(5)).parts] == [Cycle(5)]
    assert [p.kind for p in bt_tree(F.petersen()).parts] == [BLOCK]
    assert {str(p.kind) for p in bt_tree(F.theta()).parts} == {"Cycle(3)"}
    assert classify_part(F.two_k4(), single_cutsets(F.two_k4()), (0, 1, 2, 3)) == BLOCK
    assert classify_part(F.cycle(6), CutsetFamily.of([], 2), range(6)) == Cycle(6)
    assert {str(p.kind) for p in bt_tree(F.k4_chain()).parts} == {"Block"}


def test_bt_tree_requires_biconnected():
    with pytest.raises(DomainError):
        bt_tree(F.path(4))


def test_block_cut_examples():
    t = block_cut_tree(F.complete(3))
    assert t.blocks == ((0, 1, 2),) and t.cutpoints == ()
    t = block_cut_tree(F.path(3))
    assert t.blocks == ((0, 1), (1, 2)) and t.cutpoints == (1,)
    bowtie = Graph.from_edges([(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    t = block_cut_tree(bowtie)
    assert t.cutpoints == (2,) and [len(b) for b in t.blocks] == [3, 3]
    with pytest.raises(DomainError):
        block_cut_tree(Graph.from_edges([(0, 1), (2, 3)]))


def test_nonsingle_examples():
    c5 = F.cycle(5)
    assert nonsingle_from_cycles(c5, bt_tree(c5)).members() == enumerate_cutsets(c5, 2).members()
    assert len(nonsingle_from_cycles(c5, bt_tree(c5))) == 5
    assert nonsingle_from_cycles(F.theta(), bt_tree(F.theta())).members() == []
    assert nonsingle_from_cycles(F.cycle(4), bt_tree(F.cycle(4))).members() == [(0, 2), (1, 3)]


def test_tree_separation_examples():
    t = bt_tree(F.theta())
    s = t.cutsets[0]
    p0, p1, _ = t.parts
    assert tree_separation(t, s, p0, p1)
    assert not tree_separation(t, s, p0, p0)
    t = bt_tree(F.two_k4())
    assert tree_separation(t, t.cutsets[0], *t.parts)
    with pytest.raises(DomainError):
        tree_separation(t, t.parts[0], *t.parts)


def _check_part_invariants(g, t):
    h = augment(g, t.family)
    covered = set()
    for a in t.parts:
        assert set(a.members) == set(a.interior) | set(a.boundary)
        assert not set(a.interior) & set(a.boundary)
        assert set(a.boundary) == {v for s in t.cutsets for v in s.members if v in a.members}
        for v in a.interior:
            assert set(g.adj[v]) <= set(a.members)
        if a.interior:
            outside = [v for v in g.vertices if v not in a.members]
            for comp in components(g, a.boundary):
                assert not (set(comp) & set(a.interior) and set(comp) & set(outside))
        local = induced(h, a.members)
        assert is_k_connected(local, 2)
        if a.kind.is_cycle:
            assert a.kind.length == len(a) >= 3
            assert all(degree(g, v) == 2 for v in a.interior)
        else:
            assert len(a) >= 4 and is_k_connected(local, 3)
        covered |= set(a.members)
    assert covered == set(g.vertices)


@given(biconnected_graphs())
def test_tree_and_part_invariants(g):
    t = bt_tree(g)
    assert t.is_tree()
    assert all(x in t.parts for x in t.leaves())
    for s in t.cutsets:
        assert t.degree(s) == len(part_sides(g, s))
        for b in t.parts:
            for b2 in t.parts:
                assert tree_separation(t, s, b, b2) == graph_separation(t, s, b, b2)
    _check_part_invariants(g, t)


@given(biconnected_graphs())
def test_parts_match_definition_and_are_stable(g):
    fam = single_cutsets(g)
    mine = parts(g, fam)
    assert [p.members for p in mine] == oracle_parts(g, fam)
    assert [p.members for p in parts(augment(g, fam), fam)] == [p.members for p in mine]


@given(biconnected_graphs())
def test_any_independent_subfamily_builds_a_tree(g):
    fam = single_cutsets(g)
    sub = CutsetFamily.of([s.members for s in fam.cutsets[::2]], 2)
    t = decomposition_tree(g, sub)
    assert t.is_tree()
    assert [p.members for p in t.parts] == oracle_parts(g, sub)


@given(biconnected_graphs())
def test_nonsingle_cutsets(g):
    """Non-single cutsets have two sides, each with a cutpoint between the pair, and come from cycle parts."""
    t = bt_tree(g)
    all2 = set(enumerate_cutsets(g, 2).members()) if not is_k_connected(g, 3) else set()
    single = set(t.family.members())
    assert set(nonsingle_from_cycles(g, t).members()) == all2 - single
    for s in all2 - single:
        sides = components(g, s)
        assert len(sides) == 2
        a, b = s
        for side in sides:
            local = induced(g, set(side) | {a, b})
            assert any(_separated(local, c, a, b) for c in side)


def _separated(h, c, a, b):
    return not any({a, b} <= set(comp) for comp in components(h, [c]))


@given(biconnected_graphs())
def test_no_single_cutsets_dichotomy(g):
    t = bt_tree(g)
    if not t.cutsets:
        assert len(t.parts) == 1
        assert t.parts[0].kind.is_cycle or is_k_connected(g, 3)


@given(biconnected_graphs(max_n=6), biconnected_graphs(max_n=6))
def test_k1_consistency(g1, g2):
    """Glue two biconnected graphs at a vertex and hang a pendant edge: a graph with cutpoints."""
    shift = max(g1.vertices) + 1
    edges = set(g1.edges) | {(u + shift - 1, v + shift - 1) for u, v in g2.edges}
    top = max(v for e in edges for v in e)
    g = Graph.from_edges(sorted(edges | {(0, top + 1)}))
    bct = block_cut_tree(g)
    t = enumerate_k1_tree(g)
    assert list(bct.blocks) == [p.members for p in t.parts]
    assert bct.cutpoints == tuple(s.members[0] for s in t.cutsets)
    assert sorted(bct.edges) == sorted((s.members[0], p.members) for s, p in t.edges)
    assert bct.is_tree() and t.is_tree()
    nxg = nx.Graph(list(g.edges))
    assert sorted(tuple(sorted(c)) for c in nx.biconnected_components(nxg)) == sorted(bct.blocks)
    assert set(nx.articulation_points(nxg)) == set(bct.cutpoints)
