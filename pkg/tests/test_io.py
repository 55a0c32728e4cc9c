import pytest

from cutdecomp import families as F
from cutdecomp.decomposition import block_cut_tree, bt_tree
from cutdecomp.errors import ParseError
from cutdecomp.io import (
    format_edgelist,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    parse_lists,
    tree_to_dot,
    tree_to_json,
    blockcut_to_dot,
)


def test_edgelist_round_trip():
    g = F.k4_chain()
    assert parse_edgelist(format_edgelist(g)) == g


def test_edgelist_comments_and_isolated():
    g = parse_edgelist("# header\n0 1  # an edge\n\n5\n")
    assert g.vertices == (0, 1, 5) and g.m == 1


@pytest.mark.parametrize("text,line", [
    ("0 1\n1 1\n", 2),
    ("0 1\n1 0\n", 2),
    ("0 1\nx y\n", 2),
    ("0 1 2\n", 1),
    ("-1 2\n", 1),
])
def test_edgelist_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edgelist(text)
    assert exc.value.lineno == line
    assert f"line {line}" in str(exc.value)


def test_dimacs():
    g = parse_dimacs("c tri\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == F.complete(3).__class__.from_edges([(1, 2), (2, 3), (1, 3)])


@pytest.mark.parametrize("text", [
    "e 1 2\n",
    "p edge 3 2\ne 1 2\n",
    "p edge 2 1\ne 1 3\n",
    "p edge 2 1\nq 1 2\n",
    "p edge 2 1\np edge 2 1\ne 1 2\n",
])
def test_dimacs_errors(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_format_detection():
    assert parse_graph("p edge 2 1\ne 1 2\n").vertices == (1, 2)
    assert parse_graph("1 2\n").vertices == (1, 2)
    with pytest.raises(ParseError):
        parse_graph("1 2\n", "gml")


def test_lists():
    assert parse_lists("0: 1, 2\n1: 3\n") == {0: [1, 2], 1: [3]}
    for bad in ("0 1 2\n", "0:\n", "0: 1\n0: 2\n"):
        with pytest.raises(ParseError):
            parse_lists(bad)


def test_theta_dot_is_a_star():
    dot = tree_to_dot(bt_tree(F.theta()))
    assert dot.count("shape=box") == 1
    assert dot.count("shape=ellipse") == 3
    assert dot.count("Cycle(3)") == 3
    assert dot.count(" -- ") == 3


def test_tree_json_fields():
    d = tree_to_json(bt_tree(F.two_k4()))
    assert d["cutsets"] == [[0, 1]]
    assert [p["kind"] for p in d["parts"]] == ["Block", "Block"]
    assert d["parts"][0]["interior"] == [2, 3]


def test_blockcut_dot():
    dot = blockcut_to_dot(block_cut_tree(F.path(3)))
    assert 'c1 [shape=box, label="1"]' in dot and dot.count(" -- ") == 2
