import pytest
from hypothesis import given
from hypothesis import strategies as st

from cutdecomp import families as F
from cutdecomp.critical import (
    MIDDLE_KINDS,
    classify_exactly_four,
    generate_critical_chain,
    is_critical,
    terminal_part_check,
)
from cutdecomp.decomposition import bt_tree
from cutdecomp.errors import DomainError
from cutdecomp.graph import Graph, degree2_vertices
from cutdecomp.oracles import oracle_critical

from conftest import biconnected_graphs

X = F.THETA_X


def _three_squares():
    """Three 4-cycles through the non-adjacent pair {0, 1}: a star-shaped tree."""
    edges = []
    for i in range(3):
        p, q = 2 + 2 * i, 3 + 2 * i
        edges += [(0, p), (p, q), (1, q)]
    return Graph.from_edges(edges)


def test_is_critical_examples():
    rep = is_critical(F.cycle(4))
    assert rep.is_critical and rep.degree2 == (0, 1, 2, 3)
    rep = is_critical(F.theta())
    assert not rep.is_critical and rep.witness == X
    rep = is_critical(F.two_k4(), with_oracle=True)
    assert not rep.is_critical and rep.witness in (2, 3, 4, 5) and rep.oracle is False
    with pytest.raises(DomainError):
        is_critical(F.complete(3))


def test_terminal_parts():
    g = generate_critical_chain(["block4"])
    out = terminal_part_check(g)
    assert len(out) == 2 and all(len(rest) == 2 for _, rest in out)
    assert terminal_part_check(F.cycle(4)) == []
    star = _three_squares()
    assert is_critical(star).is_critical
    assert len(terminal_part_check(star)) == 3
    assert len(degree2_vertices(star)) == 6


def test_classify_examples():
    d = classify_exactly_four(F.cycle(4))
    assert d.degenerate and d.terminal_lengths == (4,)
    d = classify_exactly_four(generate_critical_chain(["cycle4", "block4"]))
    assert d.kinds == ("cycle4", "block4") and len(d.cutsets) == 3
    with pytest.raises(DomainError):
        classify_exactly_four(generate_critical_chain([], (5, 4)))
    with pytest.raises(DomainError):
        classify_exactly_four(F.theta())


def test_generate_examples():
    g = generate_critical_chain([])
    assert oracle_critical(g) and len(degree2_vertices(g)) == 4
    t = bt_tree(g)
    assert len(t.cutsets) == 1 and len(t.parts) == 2
    assert len(bt_tree(generate_critical_chain(["block4"])).nodes()) == 5
    assert len(bt_tree(generate_critical_chain(["triangle", "cycle4"])).nodes()) == 7
    with pytest.raises(DomainError):
        generate_critical_chain(["pentagon"])
    with pytest.raises(DomainError):
        generate_critical_chain([], (3, 4))


@given(st.lists(st.sampled_from(MIDDLE_KINDS), max_size=5))
def test_generate_round_trip(middle):
    g = generate_critical_chain(middle)
    d = classify_exactly_four(g)
    assert d is not None and d.kinds == tuple(middle)
    assert all(len(p) in (3, 4) for p in d.parts[1:-1])


@given(st.lists(st.sampled_from(MIDDLE_KINDS), max_size=3), st.integers(4, 7), st.integers(4, 7))
def test_longer_terminals(middle, t0, t1):
    g = generate_critical_chain(middle, (t0, t1))
    rep = is_critical(g, with_oracle=True)
    assert rep.is_critical and len(rep.degree2) == t0 + t1 - 4
    lengths = sorted(a.kind.length for a, _ in terminal_part_check(g))
    assert lengths == sorted((t0, t1))


@given(biconnected_graphs())
def test_structural_verdict_matches_oracle(g):
    rep = is_critical(g, with_oracle=True)
    assert rep.is_critical == rep.oracle
    if rep.is_critical:
        assert len(rep.degree2) >= 4
        terminal_part_check(g)
        if len(rep.degree2) == 4:
            assert classify_exactly_four(g) is not None
    else:
        assert rep.witness is not None
