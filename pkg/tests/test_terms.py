import pytest
from cwlab.algebra import (
    LINEAR_TERM_BUILDERS,
    TERM_BUILDERS,
    AddEdges,
    Create,
    Relabel,
    TermError,
    Union,
    eval_term,
    is_linear,
    parse_term,
    rename_labels,
    term_width,
    to_text,
)
from cwlab.constructions import generate


def p4_term():
    # a-b-c-d with three labels; label 3 marks finished vertices
    t = Relabel(1, 3, AddEdges(1, 2, Union(Create(1, "a"), Create(2, "b"))))
    t = Relabel(2, 3, AddEdges(2, 1, Union(t, Create(1, "c"))))
    return AddEdges(1, 2, Union(t, Create(2, "d")))


def test_eval_p4():
    lg = eval_term(p4_term())
    assert lg.graph.edges == (("a", "b"), ("b", "c"), ("c", "d"))
    assert term_width(p4_term()) == 3
    assert is_linear(p4_term())


def test_invalid_nodes():
    with pytest.raises(ValueError):
        AddEdges(1, 1, Create(1, "a"))
    with pytest.raises(ValueError):
        Create(0, "a")
    with pytest.raises(ValueError):
        eval_term(Union(Create(1, "a"), Create(2, "a")))


def test_non_linear_union():
    two = Union(Create(1, "a"), Create(1, "b"))
    t = Union(two, Union(Create(1, "c"), Create(1, "d")))
    assert not is_linear(t)
    assert is_linear(two)


def test_text_round_trip():
    t = p4_term()
    assert to_text(parse_term(to_text(t))) == to_text(t)
    for bad in ["", "(v 1)", "(add 1 2 (v 1 a)", "(foo 1)", "(v x a)"]:
        with pytest.raises(TermError):
            parse_term(bad)


def test_rename_labels():
    t = rename_labels(p4_term(), {1: 4, 2: 5, 3: 6})
    assert eval_term(t).graph == eval_term(p4_term()).graph
    assert set(eval_term(t).labels.values()) <= {4, 5, 6}
    with pytest.raises(ValueError):
        rename_labels(p4_term(), {1: 2, 2: 2, 3: 3})


@pytest.mark.parametrize("family", ["G", "H", "Hprime"])
@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_builders_match_generators(family, n):
    g = generate(family, n)
    t = TERM_BUILDERS[family](n)
    assert eval_term(t).graph == g and term_width(t) == 3
    lt = LINEAR_TERM_BUILDERS[family](n)
    assert eval_term(lt).graph == g and term_width(lt) == 4 and is_linear(lt)


def test_deep_terms_are_iterative():
    # a 3000-vertex path: evaluation and printing must not recurse per level
    t = Create(1, "v0")
    for i in range(1, 3000):
        t = Relabel(2, 1, Relabel(1, 3, AddEdges(1, 2, Union(t, Create(2, f"v{i}")))))
    g = eval_term(t).graph
    assert g.num_edges == 2999 and term_width(t) == 3 and is_linear(t)
    assert to_text(parse_term(to_text(t))) == to_text(t)
