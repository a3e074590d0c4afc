import math

import pytest
from hypothesis import given, settings

from conftest import complete, cycle, graphs, path
from cwlab.core import (
    Graph,
    GraphError,
    GraphFormatError,
    canonical_iso_equal,
    contract_edges,
    delete_vertices,
    distance,
    erase_vertex,
    is_stable,
    local_complement,
)


def test_basic_queries():
    g = Graph(["b", "a", "c"], [("b", "a"), ("c", "b")])
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("a", "b"), ("b", "c"))
    assert g.degree("b") == 2 and g.has_edge("a", "b") and not g.has_edge("a", "c")
    assert g.num_vertices == 3 and g.num_edges == 2


@pytest.mark.parametrize("edges", [[("a", "a")], [("a", "zz")]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        Graph(["a", "b"], edges)


def test_text_round_trip_and_errors():
    g = cycle(5)
    assert Graph.from_text(g.to_text()) == g
    assert Graph.from_text("# comment\nv a\nv b\n\ne b a  # trailing\n").edges == (("a", "b"),)
    with pytest.raises(GraphFormatError) as exc:
        Graph.from_text("v a\nv b\ne a b\ne b a\n")
    assert exc.value.line == 4
    with pytest.raises(GraphFormatError) as exc:
        Graph.from_text("v a\ne a q\n")
    assert exc.value.line == 2
    with pytest.raises(GraphFormatError):
        Graph.from_text("x a\n")


def test_dot_lists_everything():
    dot = path(3).to_dot()
    assert dot.startswith("graph") and dot.count("--") == 2


def test_contract_names_smallest_survivor():
    g = cycle(4)  # c0 c1 c2 c3
    res = contract_edges(g, [("c1", "c2")])
    assert res.graph.vertices == ("c0", "c1", "c3")
    assert res.graph.num_edges == 3
    assert res.merge_map["c2"] == "c1"
    assert res.components()["c1"] == ("c1", "c2")
    with pytest.raises(GraphError, match="c0-c2"):
        contract_edges(g, [("c0", "c2")])


def test_contract_k2_and_chain():
    k2 = complete(2)
    assert contract_edges(k2, k2.edges).graph == Graph(["k0"])
    p = path(4)
    assert contract_edges(p, p.edges).graph.vertices == ("p0",)


def test_local_complement_and_erase():
    p = path(3)
    assert local_complement(p, "p1") == complete(3).relabel({"k0": "p0", "k1": "p1", "k2": "p2"})
    c = cycle(5)
    e = erase_vertex(c, "c0")
    assert e == Graph(["c1", "c2", "c3", "c4"],
                      [("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c1")])
    with pytest.raises(GraphError, match="degree is 1"):
        erase_vertex(p, "p0")


def test_distance_and_stable():
    p = path(4)
    assert distance(p, "p0", "p3") == 3
    assert distance(Graph(["a", "b"]), "a", "b") == math.inf
    assert is_stable(p, ["p0", "p2"]) and not is_stable(p, ["p0", "p1"])


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_local_complement_is_involution(g):
    for v in g.vertices:
        assert local_complement(local_complement(g, v), v) == g


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_contract_every_edge_counts(g):
    for e in g.edges:
        h = contract_edges(g, [e]).graph
        assert h.num_vertices == g.num_vertices - 1
        assert h.num_edges <= g.num_edges - 1


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_complement_and_relabel_preserve_iso(g):
    assert g.complement().complement() == g
    mapping = {v: "z" + v for v in g.vertices}
    assert canonical_iso_equal(g, g.relabel(mapping))
    assert delete_vertices(g, []) == g
