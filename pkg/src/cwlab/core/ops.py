"""Elementary transformations on :class:`~cwlab.core.graph.Graph` values."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Mapping

from .graph import Graph, GraphError, edge_key

__all__ = [
    "ContractionResult",
    "contract_edges",
    "delete_vertices",
    "local_complement",
    "erase_vertex",
    "distance",
    "is_stable",
    "graphs_equal",
    "canonical_iso_equal",
    "ISO_MAX_VERTICES",
]

ISO_MAX_VERTICES = 8


@dataclass(frozen=True)
class ContractionResult:
    graph: Graph
    merge_map: Mapping[str, str]

    def components(self) -> dict[str, tuple[str, ...]]:
        """Survivor -> sorted tuple of the original vertices merged into it."""
        out: dict[str, list[str]] = {}
        for old, new in self.merge_map.items():
            out.setdefault(new, []).append(old)
        return {k: tuple(sorted(v)) for k, v in sorted(out.items())}


def contract_edges(g: Graph, f: Iterable[Iterable[str]]) -> ContractionResult:
    """Contract every edge of ``f`` in ``g``.

    Each connected component of the spanning subgraph ``(V, f)`` becomes a
    single vertex named after its lexicographically smallest member.
    Parallel edges are fused and no loops are created.
    """
    parent = {v: v for v in g.vertices}

    def find(v: str) -> str:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in f:
        u, v = tuple(e)
        if not g.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} is not an edge of the graph")
        ru, rv = find(u), find(v)
        if ru != rv:
            # the smaller name always becomes the root, so roots are component minima
            if rv < ru:
                ru, rv = rv, ru
            parent[rv] = ru
    merge = {v: find(v) for v in g.vertices}
    new_edges = set()
    for u, v in g.edges:
        a, b = merge[u], merge[v]
        if a != b:
            new_edges.add(edge_key(a, b))
    return ContractionResult(Graph(set(merge.values()), new_edges), merge)


def delete_vertices(g: Graph, s: Iterable[str]) -> Graph:
    s = set(s)
    g.check_vertices(s)
    return g.induced_subgraph(v for v in g.vertices if v not in s)


def local_complement(g: Graph, v: str) -> Graph:
    """Toggle every adjacency between two distinct neighbours of ``v``."""
    nbrs = sorted(g.neighbours(v))
    edges = set(g.edges)
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            edges ^= {(a, b)}
    return Graph(g.vertices, edges)


def erase_vertex(g: Graph, x: str) -> Graph:
    """Remove the degree-2 vertex ``x`` and join its two neighbours."""
    nbrs = g.neighbours(x)
    if len(nbrs) != 2:
        raise GraphError(f"cannot erase {x!r}: degree is {len(nbrs)}, not 2")
    y, z = sorted(nbrs)
    edges = {e for e in g.edges if x not in e}
    edges.add((y, z))
    return Graph([v for v in g.vertices if v != x], edges)


def distance(g: Graph, u: str, v: str) -> float:
    """Shortest-path length; ``math.inf`` when ``u`` and ``v`` are disconnected.

    Returns an ``int`` whenever the distance is finite.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in g.neighbours(w):
            if x not in seen:
                seen[x] = seen[w] + 1
                if x == v:
                    return seen[x]
                queue.append(x)
    return math.inf


def is_stable(g: Graph, x: Iterable[str]) -> bool:
    x = set(x)
    g.check_vertices(x)
    return all(not (g.neighbours(v) & x) for v in x)


def graphs_equal(a: Graph, b: Graph) -> bool:
    """Name-exact equality: same vertex names and the same edges."""
    return a == b


def canonical_iso_equal(a: Graph, b: Graph) -> bool:
    """Isomorphism test by exhaustive permutation, for graphs of at most 8 vertices."""
    for g in (a, b):
        if g.num_vertices > ISO_MAX_VERTICES:
            raise GraphError(
                f"isomorphism test limited to {ISO_MAX_VERTICES} vertices, got {g.num_vertices}")
    if a.num_vertices != b.num_vertices or a.num_edges != b.num_edges:
        return False
    if sorted(map(a.degree, a.vertices)) != sorted(map(b.degree, b.vertices)):
        return False
    av, bv = a.vertices, b.vertices
    target = {frozenset(e) for e in b.edges}
    a_edges = a.edges
    pos = {v: i for i, v in enumerate(av)}
    for perm in permutations(bv):
        if all(frozenset((perm[pos[u]], perm[pos[v]])) in target for u, v in a_edges):
            return True
    return False
