"""Exact rank-width by dynamic programming over vertex subsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..core.graph import Graph, GraphError
from .gf2 import cut_rank_mask

__all__ = [
    "RWD_MAX_VERTICES",
    "BranchDecomposition",
    "RankWidthResult",
    "SolverBudgetError",
    "rank_width_exact",
]

RWD_MAX_VERTICES = 16


class SolverBudgetError(GraphError):
    """The instance is larger than the solver's budget allows.

    ``lower_bound`` is the best proven lower bound at the time of rejection.
    """

    def __init__(self, message: str, lower_bound: int | None = None):
        self.lower_bound = lower_bound
        super().__init__(message)


@dataclass(frozen=True)
class BranchDecomposition:
    """Tree as a parent array (``-1`` marks the root); leaves carry vertex names."""

    parent: tuple[int, ...]
    leaves: Mapping[int, str]

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(i, p) for i, p in enumerate(self.parent) if p >= 0]

    def degrees(self) -> list[int]:
        deg = [0] * len(self.parent)
        for i, p in self.tree_edges():
            deg[i] += 1
            deg[p] += 1
        return deg

    def validate(self, g: Graph) -> None:
        """Raise unless this is a branch decomposition of ``g``."""
        n = len(self.parent)
        if sorted(self.leaves.values()) != list(g.vertices):
            raise GraphError("leaf labels are not exactly the vertex set")
        roots = [i for i, p in enumerate(self.parent) if p < 0]
        if len(roots) != 1:
            raise GraphError("parent array must have exactly one root")
        for i in range(n):
            seen = set()
            j = i
            while j >= 0:
                if j in seen:
                    raise GraphError("parent array contains a cycle")
                seen.add(j)
                j = self.parent[j]
        deg = self.degrees()
        for i in range(n):
            if i in self.leaves:
                if deg[i] > 1:
                    raise GraphError(f"leaf node {i} has degree {deg[i]}")
            elif deg[i] != 3:
                raise GraphError(f"internal node {i} has degree {deg[i]}, expected 3")

    def bipartitions(self) -> list[frozenset[str]]:
        """For every tree edge, the vertex set on the child side."""
        below: dict[int, set[str]] = {i: set() for i in range(len(self.parent))}
        for node, name in self.leaves.items():
            j = node
            while j >= 0:
                below[j].add(name)
                j = self.parent[j]
        return [frozenset(below[i]) for i, _ in self.tree_edges()]

    def width(self, g: Graph) -> int:
        names, adj = g.index()
        pos = {v: i for i, v in enumerate(names)}
        full = (1 << len(names)) - 1
        best = 0
        for side in self.bipartitions():
            mask = sum(1 << pos[v] for v in side)
            best = max(best, cut_rank_mask(adj, mask, full))
        return best

    def to_json(self) -> dict:
        return {"parent": list(self.parent),
                "leaves": {str(k): v for k, v in sorted(self.leaves.items())}}


@dataclass(frozen=True)
class RankWidthResult:
    value: int
    certificate: BranchDecomposition
    states_explored: int


def _popcount_order(n: int) -> list[int]:
    return sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), m))


def rank_width_exact(g: Graph, max_vertices: int = RWD_MAX_VERTICES) -> RankWidthResult:
    """Minimum over branch decompositions of the largest cut-rank of a tree edge.

    A set ``X`` is feasible for bound ``k`` when its cut-rank is at most
    ``k`` and it is a single vertex or splits into two feasible sets; the
    bound holds for ``g`` when ``V`` splits into two feasible sets.
    """
    names, adj = g.index()
    n = len(names)
    if n > max_vertices:
        raise SolverBudgetError(f"rank-width solver limited to {max_vertices} vertices, got {n}")
    if n == 0:
        raise GraphError("rank-width of the empty graph is undefined")
    if n == 1:
        return RankWidthResult(0, BranchDecomposition((-1,), {0: names[0]}), 1)
    full = (1 << n) - 1
    order = _popcount_order(n)
    cr: dict[int, int] = {}
    for m in order:
        if m == full:
            continue
        comp = full & ~m
        cr[m] = cr[comp] if comp in cr else cut_rank_mask(adj, m, full)
    explored = 0
    k = 0
    while True:
        split: dict[int, int] = {}
        for x in order:
            if x == full or cr[x] > k:
                continue
            explored += 1
            if x & (x - 1) == 0:
                split[x] = 0
                continue
            found = _find_split(x, split)
            if found:
                split[x] = found
        top = _find_split(full, split)
        explored += 1
        if top:
            return RankWidthResult(k, _decomposition(names, full, top, split), explored)
        k += 1


def _find_split(x: int, feasible: dict[int, int]) -> int:
    low = x & -x
    rest = x ^ low
    sub = rest
    while True:
        a = sub | low
        if a != x and a in feasible and (x ^ a) in feasible:
            return a
        if sub == 0:
            return 0
        sub = (sub - 1) & rest


def _decomposition(names, full: int, top: int, split: dict[int, int]) -> BranchDecomposition:
    parent: list[int] = []
    leaves: dict[int, str] = {}

    def build(x: int, par: int) -> int:
        node = len(parent)
        parent.append(par)
        if x & (x - 1) == 0:
            leaves[node] = names[x.bit_length() - 1]
        else:
            a = split[x]
            build(a, node)
            build(x ^ a, node)
        return node

    # the two halves of the top split are joined by a single tree edge
    root = build(top, -1)
    build(full ^ top, root)
    return BranchDecomposition(tuple(parent), leaves)
