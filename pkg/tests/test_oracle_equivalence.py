"""The solvers against brute-force oracles that share no code with them."""

import random
from itertools import combinations

import pytest

from cwlab.corpus import labeled_graphs, random_graph
from cwlab.solvers import cwd_exact, lcwd_exact, rank_width_exact
from oracles import brute_rank_width, oracle_widths, targeted_width_leq


def _mask(g):
    names, adj = g.index()
    pairs = list(combinations(range(len(names)), 2))
    return sum(1 << i for i, (u, v) in enumerate(pairs) if adj[u] >> v & 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cwd_matches_enumeration(n):
    expect = oracle_widths(n)
    expect_lin = oracle_widths(n, linear=True)
    for g in labeled_graphs(n):
        m = _mask(g)
        assert cwd_exact(g).k == expect[m]
        assert lcwd_exact(g).k == expect_lin[m]


def test_oracle_known_values():
    # P4 on v0..v3 is the mask with pairs (0,1),(1,2),(2,3)
    pairs = list(combinations(range(4), 2))
    p4 = sum(1 << pairs.index(p) for p in [(0, 1), (1, 2), (2, 3)])
    assert oracle_widths(4)[p4] == 3
    assert oracle_widths(4)[0] == 1


@pytest.mark.parametrize("seed", range(6))
def test_random_six_vertex_graphs(seed):
    rng = random.Random(seed)
    g = random_graph(6, rng.uniform(0.3, 0.7), rng)
    names, adj = g.index()
    k = cwd_exact(g).k
    assert targeted_width_leq(6, list(adj), k)
    assert not targeted_width_leq(6, list(adj), k - 1) if k > 1 else True
    assert rank_width_exact(g).value == brute_rank_width(6, list(adj))


def test_rank_width_all_five_vertex_graphs():
    for g in labeled_graphs(5):
        names, adj = g.index()
        assert rank_width_exact(g).value == brute_rank_width(5, list(adj))


def test_search_witness_against_oracle():
    # lower bound of the first search witness by plain enumeration on its
    # twin-free kernel; the upper bound is the explicit expression it carries
    from cwlab.algebra import eval_term, parse_term, term_width
    from cwlab.experiments import witness_search
    from cwlab.experiments.witness import contracted
    from cwlab.solvers import twin_reduction

    w = witness_search(None, 3).witness
    g = contracted(w.n, w.F)
    kernel, _ = twin_reduction(g)
    names, adj = kernel.index()
    assert not targeted_width_leq(len(names), list(adj), 3)
    upper = parse_term(w.certificates["after_upper"])
    assert eval_term(upper).graph == g and term_width(upper) == w.cwd_after == 4
