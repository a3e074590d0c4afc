"""End-to-end reconstructions of the square grid from contracted graphs.

``prop1_pipeline`` goes through the distance-2 map on a contraction of
H_{m^2}; ``prop1_alt_pipeline`` goes through vertex-minor operations on a
contraction of H'_{n^2}.  Both compare the recovered graph with the grid
name-for-name.
"""

from __future__ import annotations

import time
from typing import Callable

from ..algebra import (
    build_linear_term_H,
    build_term_H,
    eval_term,
    is_linear,
    term_width,
    to_text,
)
from ..constructions import (
    HUB,
    alpha,
    apply_script,
    contraction_set,
    gen_grid,
    gen_H,
    gen_Hprime,
    grid_coloring,
    itm_as_vertex_minor,
    x_name,
)
from ..core import contract_edges, delete_vertices, erase_vertex, is_stable, local_complement
from ..solvers import RWD_MAX_VERTICES, rank_width_exact
from .report import PipelineFailure, PipelineReport, Stage

__all__ = ["prop1_pipeline", "prop1_alt_pipeline", "PROP1_SIZES", "PROP1_ALT_SIZES"]

PROP1_SIZES = range(2, 7)
PROP1_ALT_SIZES = range(2, 5)


def _run(name: str, size: int, body: Callable[[PipelineReport], None]) -> PipelineReport:
    report = PipelineReport(name, size)
    start = time.monotonic()
    try:
        body(report)
        report.verdict = True
    except PipelineFailure as exc:
        report.stages.append(Stage(exc.stage, ok=False, note=str(exc)))
        report.failed_stage = exc.stage
        report.verdict = False
    report.elapsed = time.monotonic() - start
    return report


def _expect(cond: bool, stage: str, message: str) -> None:
    if not cond:
        raise PipelineFailure(stage, message)


def prop1_pipeline(m: int) -> PipelineReport:
    """Recover the m x m grid as alpha(H_{m^2} / F, {x1..x_{m^2}})."""
    if m not in PROP1_SIZES:
        raise ValueError(f"m must lie in {PROP1_SIZES.start}..{PROP1_SIZES.stop - 1}, got {m}")

    def body(rep: PipelineReport) -> None:
        n = m * m
        h = gen_H(n)
        _expect(h.num_vertices == 5 * n and h.num_edges == 8 * n * n - 4 * n,
                "host", f"H_{n} has {h.num_vertices} vertices and {h.num_edges} edges")
        rep.stages.append(Stage.of("host H_n", h, f"n={n}"))

        t3 = build_term_H(n)
        _expect(term_width(t3) == 3 and eval_term(t3).graph == h, "term width 3",
                "width-3 expression does not evaluate to H_n")
        t4 = build_linear_term_H(n)
        _expect(term_width(t4) == 4 and is_linear(t4) and eval_term(t4).graph == h,
                "linear term width 4", "linear width-4 expression does not evaluate to H_n")
        rep.stages.append(Stage("term witnesses", note="cwd <= 3, lcwd <= 4"))
        rep.widths["cwd_upper(H_n)"] = {"value": 3, "certificate": to_text(t3)}
        rep.widths["lcwd_upper(H_n)"] = {"value": 4, "certificate": to_text(t4)}

        grid = gen_grid(m)
        coloring = grid_coloring(m)
        rep.stages.append(Stage.of("grid R", grid, "proper 4-edge-colouring"))
        f = contraction_set(h, coloring)
        _expect(len(f) == grid.num_edges, "contraction set",
                f"|F|={len(f)} but R has {grid.num_edges} edges")
        rep.stages.append(Stage("contraction set F", note=f"|F|={len(f)}"))

        k = contract_edges(h, f).graph
        _expect(k.num_vertices == h.num_vertices - len(f), "contract",
                "contraction merged an unexpected number of vertices")
        rep.stages.append(Stage.of("K = H_n / F", k))

        xs = [x_name(i) for i in range(1, n + 1)]
        _expect(is_stable(k, xs), "stable X", "X is not stable in K")
        rep.stages.append(Stage("X stable in K", note=f"|X|={n}"))

        r = alpha(k, xs)
        rep.stages.append(Stage.of("alpha(K, X)", r))
        _expect(r == grid, "alpha(K, X) == R", "recovered graph differs from the grid")

    return _run("prop1", m, body)


def prop1_alt_pipeline(n: int) -> PipelineReport:
    """Recover the n x n grid from H'_{n^2} / F by deletions, local complementations
    and erasures."""
    if n not in PROP1_ALT_SIZES:
        raise ValueError(
            f"n must lie in {PROP1_ALT_SIZES.start}..{PROP1_ALT_SIZES.stop - 1}, got {n}")

    def body(rep: PipelineReport) -> None:
        big = n * n
        hp = gen_Hprime(big)
        _expect(hp.num_vertices == 5 * big + 1, "host",
                f"H'_{big} has {hp.num_vertices} vertices")
        rep.stages.append(Stage.of("host H'_n", hp, f"n={big}"))

        grid = gen_grid(n)
        coloring = grid_coloring(n)
        f = contraction_set(hp, coloring)
        res = contract_edges(hp, f)
        r_prime = res.graph
        rep.stages.append(Stage.of("R' = H'_n / F", r_prime, f"|F|={len(f)}"))

        merged = sorted(v for v, members in res.components().items() if len(members) > 1)
        origin = {z: res.components()[z] for z in merged}
        unused = sorted(v for v in r_prime.vertices
                        if v not in merged and v != HUB and not v.startswith("x"))
        script = [("delete", v) for v in unused]
        g = delete_vertices(r_prime, unused)
        rep.stages.append(Stage.of("delete unused copies", g, f"{len(unused)} deleted"))

        g = local_complement(g, HUB)
        script.append(("lc", HUB))
        rep.stages.append(Stage.of("local complement at y0", g))
        g = delete_vertices(g, [HUB])
        script.append(("delete", HUB))
        rep.stages.append(Stage.of("delete y0", g))

        _expect(is_stable(g, merged), "contracted vertices stable",
                "contracted vertices are not pairwise non-adjacent after the hub steps")
        for z in merged:
            ends = sorted(x_name(int(y[1:].split("_")[0])) for y in origin[z])
            _expect(sorted(g.neighbours(z)) == ends, "contracted vertices degree 2",
                    f"{z} has neighbours {sorted(g.neighbours(z))}, expected {ends}")
        rep.stages.append(Stage("audit contracted vertices",
                                note=f"{len(merged)} stable, each of degree 2"))

        erase_script = [("erase", z) for z in merged]
        for _, z in erase_script:
            g = erase_vertex(g, z)
        rep.stages.append(Stage.of("erase contracted vertices", g))
        _expect(g == grid, "result == R", "recovered graph differs from the grid")

        # the same result through local complementations and deletions only
        vm_script = script + itm_as_vertex_minor(apply_script(r_prime, script), erase_script)
        _expect(apply_script(r_prime, vm_script) == grid, "vertex-minor script",
                "lc/delete script does not reproduce the grid")
        rep.stages.append(Stage("vertex-minor script", note=f"{len(vm_script)} lc/delete steps"))

        rw = rank_width_exact(grid)
        _expect(rw.certificate.width(grid) == rw.value, "rank-width certificate",
                "certificate width differs from the reported value")
        rep.widths["rwd(R)"] = {"value": rw.value, "certificate": rw.certificate.to_json()}
        # R is a vertex-minor of R', and vertex-minors never increase rank-width
        if r_prime.num_vertices <= RWD_MAX_VERTICES:
            rwp = rank_width_exact(r_prime)
            _expect(rwp.value >= rw.value, "rank-width monotone",
                    f"rwd(R')={rwp.value} < rwd(R)={rw.value}")
            rep.widths["rwd(R')"] = {"value": rwp.value, "certificate": rwp.certificate.to_json()}
        else:
            rep.widths["rwd(R') lower bound"] = {
                "value": rw.value, "certificate": "R is a vertex-minor of R'"}

    return _run("prop1alt", n, body)
