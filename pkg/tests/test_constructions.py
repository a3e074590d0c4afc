import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwlab.constructions import (
    ColoringError,
    FamilyError,
    ProperEdgeColoring,
    ScriptError,
    alpha,
    apply_script,
    contraction_set,
    gen_G,
    gen_grid,
    gen_H,
    gen_Hprime,
    generate,
    grid_coloring,
    itm_as_vertex_minor,
    parse_name,
)
from cwlab.core import Graph, GraphError, contract_edges, distance, is_stable


@pytest.mark.parametrize("n", range(2, 11))
def test_family_sizes(n):
    assert gen_G(n).num_vertices == 2 * n
    assert gen_G(n).num_edges == n + n * (n - 1) // 2
    h = gen_H(n)
    assert (h.num_vertices, h.num_edges) == (5 * n, 8 * n * n - 4 * n)
    hp = gen_Hprime(n)
    assert (hp.num_vertices, hp.num_edges) == (5 * n + 1, 8 * n * n + 6 * n)


def test_family_errors_and_names():
    with pytest.raises(FamilyError):
        gen_H(1)
    with pytest.raises(FamilyError):
        generate("K", 3)
    assert parse_name("y3_2") == ("y", 3, 2)
    assert parse_name("x10") == ("x", 10, None)
    with pytest.raises(FamilyError):
        parse_name("x1_2")


def test_grid_structure():
    g = gen_grid(3)
    assert g.num_vertices == 9 and g.num_edges == 12
    assert sorted(g.degree(v) for v in g.vertices) == [2, 2, 2, 2, 3, 3, 3, 3, 4]


@pytest.mark.parametrize("n", range(2, 7))
def test_grid_coloring_is_proper(n):
    col = grid_coloring(n)
    assert set(col.color) == set(gen_grid(n).edges)
    for v in col.base.vertices:
        seen = [col.of(v, u) for u in col.base.neighbours(v)]
        assert len(seen) == len(set(seen))
    assert ProperEdgeColoring.from_text(col.base, col.to_text()).color == col.color


def test_improper_coloring_rejected():
    p = Graph(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3")])
    with pytest.raises(ColoringError):
        ProperEdgeColoring(p, {("x1", "x2"): 1, ("x2", "x3"): 1})
    with pytest.raises(ColoringError):
        ProperEdgeColoring(p, {("x1", "x2"): 1, ("x2", "x3"): 5})
    with pytest.raises(ColoringError):
        ProperEdgeColoring(p, {("x1", "x2"): 1})


def test_contraction_set_is_matching():
    h = gen_H(4)
    f = contraction_set(h, grid_coloring(2))
    ends = [v for e in f for v in e]
    assert len(ends) == len(set(ends)) == 8
    assert all(h.has_edge(*e) for e in f)


def test_alpha_requires_stable_set():
    p = Graph(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert alpha(p, ["a", "c"]).edges == (("a", "c"),)
    with pytest.raises(GraphError):
        alpha(p, ["a", "b"])


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.data())
def test_alpha_is_distance_two(n, data):
    # contract a random sub-matching of F and check alpha against BFS distances
    h = gen_H(n * n)
    f = sorted(contraction_set(h, grid_coloring(n)))
    keep = data.draw(st.lists(st.sampled_from(f), unique=True)) if f else []
    k = contract_edges(h, keep).graph
    xs = [v for v in k.vertices if v.startswith("x")]
    assert is_stable(k, xs)
    a = alpha(k, xs)
    for i, u in enumerate(xs):
        for v in xs[i + 1:]:
            assert a.has_edge(u, v) == (distance(k, u, v) == 2)


def test_scripts():
    c5 = Graph([f"c{i}" for i in range(5)],
               [(f"c{i}", f"c{(i + 1) % 5}") for i in range(5)])
    script = [("erase", "c0"), ("delete", "c2")]
    out = apply_script(c5, script)
    vm = itm_as_vertex_minor(c5, script)
    assert all(op in ("lc", "delete") for op, _ in vm)
    assert apply_script(c5, vm) == out
    with pytest.raises(ScriptError) as exc:
        apply_script(c5, [("delete", "c0"), ("erase", "c1")])
    assert exc.value.index == 1
