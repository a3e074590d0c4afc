import json

import pytest

from cwlab.constructions import gen_H
from cwlab.core import Graph
from cwlab.corpus import graphs_up_to
from cwlab.experiments import (
    Checkpoint,
    CheckpointError,
    cograph_closure_check,
    inequality_suite,
    matching_key,
    orbit_representatives,
    prop1_alt_pipeline,
    prop1_pipeline,
    prop2_property_suite,
    single_steps,
    witness_search,
)
from cwlab.experiments.witness import contracted
from cwlab.solvers import CwResult, cwd_leq, rank_width_exact


@pytest.mark.parametrize("m", [2, 3, 4])
def test_prop1_pipeline(m):
    rep = prop1_pipeline(m)
    assert rep.verdict and rep.failed_stage is None
    assert rep.stages[-1].vertices == m * m


def test_prop1_report_sizes():
    rep = prop1_pipeline(3)
    host = rep.stages[0]
    assert (host.vertices, host.edges) == (45, 612)
    data = rep.to_json()
    assert "elapsed_ms" not in data and "elapsed_ms" in rep.to_json(timings=True)
    json.dumps(data)


def test_prop1_range():
    with pytest.raises(ValueError):
        prop1_pipeline(7)


@pytest.mark.parametrize("n", [2, 3])
def test_prop1_alt_pipeline(n):
    rep = prop1_alt_pipeline(n)
    assert rep.verdict, rep.summary()
    assert rep.widths["rwd(R)"]["value"] == n - 1
    names = [s.name for s in rep.stages]
    assert names.index("audit contracted vertices") < names.index("erase contracted vertices")


def test_prop1_alt_host_size():
    assert prop1_alt_pipeline(2).stages[0].vertices == 21


def test_single_steps():
    c5 = Graph([f"c{i}" for i in range(5)], [(f"c{i}", f"c{(i + 1) % 5}") for i in range(5)])
    steps = list(single_steps(c5))
    assert sum(op == "erase" for op, _, _ in steps) == 5
    erased = [h for op, _, h in steps if op == "erase"][0]
    assert rank_width_exact(c5).value == 2 and rank_width_exact(erased).value == 1


def test_suites_small():
    corpus = graphs_up_to(5)
    assert prop2_property_suite(corpus).passed
    assert inequality_suite(corpus).passed
    rep = cograph_closure_check(4)
    assert rep.passed and rep.graphs == 1 + 2 + 4 + 10
    with pytest.raises(ValueError):
        cograph_closure_check(7)


def test_orbit_levels():
    levels = orbit_representatives(2)
    assert [len(lv) for lv in levels] == [1, 2, 3, 3, 3, 1]
    h = gen_H(3)
    for lv in orbit_representatives(3):
        keys = {matching_key(3, F) for F in lv}
        assert len(keys) == len(lv)
        for F in lv:
            ends = [v for e in F for v in e]
            assert len(ends) == len(set(ends)) and all(h.has_edge(*e) for e in F)
            assert list(F) == sorted(F)
        assert list(lv) == sorted(lv)


def test_matching_key_invariant_under_symmetry():
    F = [("y1_1", "y3_1"), ("y2_1", "y3_2")]
    G = [("y2_4", "y1_3"), ("y3_2", "y1_1")]  # swap groups 2 and 3 and permute copies
    assert matching_key(3, F) == matching_key(3, [tuple(sorted(e)) for e in G])
    assert contracted(3, F).num_vertices == 13


def test_zero_budget_checkpoint():
    out = witness_search(0)
    assert out.status == "budget" and out.witness is None
    assert out.checkpoint.cursor() == (2, 1, 0) and out.checkpoint.candidates_examined == 0


def test_resume_equals_straight_run():
    full = witness_search(None, 3)
    part = witness_search(None, 3, max_candidates=7)
    assert part.status == "budget" and part.checkpoint.candidates_examined == 7
    resumed = witness_search(None, 3, resume=Checkpoint.from_json(part.checkpoint.to_json()))
    assert resumed.to_json() == full.to_json()


def test_witness_is_certified():
    out = witness_search(None, 3)
    w = out.witness
    assert out.status == "witness" and w is not None
    ends = [v for e in w.F for v in e]
    assert len(ends) == len(set(ends)) and w.f in w.F
    assert w.cwd_before == 3 and 4 <= w.cwd_after <= 6
    after = contracted(w.n, w.F)
    before = contracted(w.n, [e for e in w.F if e != w.f])
    assert not cwd_leq(after, 3, max_vertices=None).feasible
    assert cwd_leq(before, 3, max_vertices=None).feasible
    assert not cwd_leq(before, 2, max_vertices=None).feasible


def test_pluggable_backend_and_jobs():
    calls = []

    def always_small(g, time_limit=None):
        calls.append(g.num_vertices)
        return CwResult(3, True)

    out = witness_search(None, 2, backend=always_small)
    assert out.status == "exhausted" and calls
    assert witness_search(None, 3, jobs=2).to_json() == witness_search(None, 3).to_json()


def test_checkpoint_validation(tmp_path):
    with pytest.raises(CheckpointError):
        Checkpoint.from_json({"version": 99})
    with pytest.raises(CheckpointError):
        Checkpoint.from_json({"version": 1, "n": 2})
    p = tmp_path / "ck.json"
    p.write_text("{not json")
    with pytest.raises(CheckpointError, match="line 1"):
        Checkpoint.load(str(p))
