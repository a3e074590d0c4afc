"""Exhaustive property checks over small corpora.

Every suite returns a :class:`SuiteReport`; a violation is a finding, not an
exception.  Exact widths are cached by canonical form, since the corpora are
closed under the steps applied and isomorphic graphs have equal widths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from ..core import Graph, contract_edges, delete_vertices, erase_vertex
from ..corpus import canonical_key, graphs_up_to
from ..solvers import cwd_exact, is_cograph, rank_width_exact

__all__ = [
    "SuiteReport",
    "WidthCache",
    "prop2_property_suite",
    "cograph_closure_check",
    "inequality_suite",
    "single_steps",
    "PROP2_MAX_VERTICES",
    "CLOSURE_MAX_VERTICES",
]

PROP2_MAX_VERTICES = 8
CLOSURE_MAX_VERTICES = 6


@dataclass
class SuiteReport:
    suite: str
    graphs: int = 0
    checks: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "graphs": self.graphs,
            "checks": self.checks,
            "passed": self.passed,
            "violations": self.violations,
        }

    def summary(self) -> str:
        head = (f"{self.suite}: {'PASS' if self.passed else 'FAIL'} "
                f"({self.graphs} graphs, {self.checks} checks, {len(self.violations)} violations)")
        return "\n".join([head] + [f"  {v}" for v in self.violations[:20]])


class WidthCache:
    """Exact rank-width and clique-width keyed by canonical form."""

    def __init__(self):
        self._rwd: dict[tuple[int, int], int] = {}
        self._cwd: dict[tuple[int, int], int] = {}

    def rwd(self, g: Graph) -> int:
        key = canonical_key(g)
        if key not in self._rwd:
            self._rwd[key] = rank_width_exact(g).value
        return self._rwd[key]

    def cwd(self, g: Graph) -> int:
        key = canonical_key(g)
        if key not in self._cwd:
            self._cwd[key] = cwd_exact(g).k
        return self._cwd[key]


def single_steps(g: Graph) -> Iterable[tuple[str, str, Graph]]:
    """Every single vertex deletion and every valid erasure of ``g``."""
    for v in g.vertices:
        yield "delete", v, delete_vertices(g, [v])
        if g.degree(v) == 2:
            yield "erase", v, erase_vertex(g, v)


def prop2_property_suite(corpus: Iterable[Graph], cache: WidthCache | None = None) -> SuiteReport:
    """rwd never grows under one delete/erase step, and cwd of the result is at most
    2^(cwd(g)+1) - 1."""
    cache = cache or WidthCache()
    rep = SuiteReport("prop2")
    for g in corpus:
        if g.num_vertices > PROP2_MAX_VERTICES:
            raise ValueError(f"corpus graphs are limited to {PROP2_MAX_VERTICES} vertices")
        rep.graphs += 1
        rg, cg = cache.rwd(g), cache.cwd(g)
        for op, v, h in single_steps(g):
            if h.num_vertices == 0:
                continue
            rh, ch = cache.rwd(h), cache.cwd(h)
            rep.checks += 1
            if rh > rg or ch > 2 ** (cg + 1) - 1:
                rep.violations.append({
                    "graph": g.to_text(), "step": [op, v],
                    "rwd": [rg, rh], "cwd": [cg, ch],
                })
    return rep


def cograph_closure_check(limit_n: int) -> SuiteReport:
    """Contracting one edge of a cograph gives a cograph (one graph per isomorphism class)."""
    if not 1 <= limit_n <= CLOSURE_MAX_VERTICES:
        raise ValueError(f"limit_n must lie in 1..{CLOSURE_MAX_VERTICES}, got {limit_n}")
    rep = SuiteReport("cograph-closure")
    for g in graphs_up_to(limit_n):
        if not is_cograph(g):
            continue
        rep.graphs += 1
        for e in g.edges:
            rep.checks += 1
            h = contract_edges(g, [e]).graph
            if not is_cograph(h):
                rep.violations.append({"graph": g.to_text(), "edge": list(e)})
    return rep


def inequality_suite(corpus: Iterable[Graph], cache: WidthCache | None = None) -> SuiteReport:
    """rwd(g) <= cwd(g) <= 2^(rwd(g)+1) - 1."""
    cache = cache or WidthCache()
    rep = SuiteReport("rwd-cwd inequality")
    for g in corpus:
        rep.graphs += 1
        rep.checks += 1
        r, c = cache.rwd(g), cache.cwd(g)
        if not r <= c <= 2 ** (r + 1) - 1:
            rep.violations.append({"graph": g.to_text(), "rwd": r, "cwd": c})
    return rep
