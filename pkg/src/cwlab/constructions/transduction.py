"""The contraction set built from an edge colouring, and the distance-2 map."""

from __future__ import annotations

from typing import Iterable

from ..core.graph import Graph, GraphError, edge_key
from ..core.ops import is_stable
from .coloring import ProperEdgeColoring
from .families import FamilyError, copy_name, parse_name

__all__ = ["contraction_set", "alpha"]


def contraction_set(h: Graph, r: ProperEdgeColoring) -> set[tuple[str, str]]:
    """Edges ``y{i}_{c} - y{j}_{c}`` of ``h`` for every edge ``x{i} - x{j}`` of colour c.

    ``h`` is ``gen_H(n)`` or ``gen_Hprime(n)`` and the colouring's base graph
    lives on ``x1..xn``.  The result is a matching of ``h``.
    """
    for v in r.base.vertices:
        try:
            kind, _, c = parse_name(v)
        except FamilyError:
            kind, c = None, None
        if kind != "x" or c is not None or v not in h:
            raise FamilyError(f"base vertex {v!r} is not an x-vertex of the host graph")
    f = set()
    used: dict[str, tuple[str, str]] = {}
    for (u, v), c in r.color.items():
        i, j = parse_name(u)[1], parse_name(v)[1]
        a, b = copy_name(i, c), copy_name(j, c)
        if not h.has_edge(a, b):
            raise FamilyError(f"host graph has no edge {a}-{b} for base edge {u}-{v}")
        e = edge_key(a, b)
        for y in e:
            if y in used:
                # only reachable with an improper colouring
                raise GraphError(f"edges {used[y]} and {e} of F share {y}")
            used[y] = e
        f.add(e)
    return f


def alpha(g: Graph, x: Iterable[str]) -> Graph:
    """Graph on the stable set ``x``; two vertices are adjacent iff at distance 2 in ``g``."""
    x = sorted(set(x))
    if not is_stable(g, x):
        raise GraphError("alpha is only defined on a stable set")
    nbrs = {v: g.neighbours(v) for v in x}
    edges = [(u, v) for i, u in enumerate(x) for v in x[i + 1:] if nbrs[u] & nbrs[v]]
    return Graph(x, edges)
