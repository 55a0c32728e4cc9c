import pytest

from cutdecomp import families as F
from cutdecomp.connectivity import CutsetFamily, enumerate_cutsets, single_cutsets
from cutdecomp.errors import BudgetError, DomainError
from cutdecomp.graph import Graph
from cutdecomp.oracles import (
    OracleBudget,
    oracle_biconnected,
    oracle_choice_number,
    oracle_choosable,
    oracle_chromatic,
    oracle_critical,
    oracle_cutsets,
    oracle_parts,
    random_biconnected,
)

A, B, X, Y, Z = F.THETA_A, F.THETA_B, F.THETA_X, F.THETA_Y, F.THETA_Z

# generated once with random_biconnected(5, 0.2, seed=5) and frozen
GOLDEN_N5 = [(0, 1), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]


def test_oracle_parts_examples():
    assert oracle_parts(F.theta(), single_cutsets(F.theta())) == [(A, B, X), (A, B, Y), (A, B, Z)]
    assert oracle_parts(F.cycle(4), CutsetFamily.of([], 2)) == [(0, 1, 2, 3)]


def test_oracle_parts_budget():
    big = F.cycle(13)
    with pytest.raises(BudgetError):
        oracle_parts(big, [])


def test_chromatic_examples():
    assert oracle_chromatic(F.complete(4)) == 4
    assert oracle_chromatic(F.cycle(5)) == 3
    assert oracle_chromatic(F.theta()) == 2
    assert oracle_chromatic(F.petersen()) == 3
    with pytest.raises(BudgetError):
        oracle_chromatic(F.cycle(13))


def test_choosable_examples():
    assert oracle_choosable(F.cycle(4), 2)
    assert not oracle_choosable(F.cycle(5), 2)
    assert oracle_choosable(F.complete(4), 4)
    assert not oracle_choosable(F.complete_bipartite(3, 3), 2)
    assert oracle_choice_number(F.cycle(5)) == 3
    with pytest.raises(BudgetError):
        oracle_choosable(F.complete_bipartite(3, 4), 3)


def test_cutset_examples():
    assert oracle_cutsets(F.complete(5), 3) == []
    assert len(oracle_cutsets(F.cycle(6), 2)) == 9
    g = F.two_k4()
    threes = oracle_cutsets(g, 3)
    twos = oracle_cutsets(g, 2)
    assert all(any(set(t) <= set(s) for t in twos) for s in threes)
    assert oracle_cutsets(g, 2) == enumerate_cutsets(g, 2).members()
    with pytest.raises(BudgetError):
        oracle_cutsets(F.cycle(10), 5, OracleBudget(cutset_subsets=10))


def test_critical_examples():
    assert oracle_critical(F.cycle(4))
    assert not oracle_critical(F.complete(4))
    assert not oracle_critical(F.theta())
    with pytest.raises(DomainError):
        oracle_critical(F.path(4))


def test_random_biconnected():
    assert random_biconnected(3, 0.5, 1) == F.complete(3)
    assert random_biconnected(8, 0.3, 42) == random_biconnected(8, 0.3, 42)
    assert random_biconnected(5, 0.2, 5) == Graph.from_edges(GOLDEN_N5)
    for seed in range(50):
        g = random_biconnected(4 + seed % 6, 0.1, seed)
        assert oracle_biconnected(g)
    with pytest.raises(DomainError):
        random_biconnected(2)


def test_budget_validation():
    with pytest.raises(DomainError):
        OracleBudget(parts_vertices=0)
