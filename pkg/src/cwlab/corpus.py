"""Small-graph corpora: labelled enumeration, isomorphism classes, random samples."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .core.graph import Graph

__all__ = [
    "vertex_names",
    "labeled_graphs",
    "canonical_code",
    "canonical_key",
    "nonisomorphic_graphs",
    "graphs_up_to",
    "random_graph",
    "random_graphs",
]


def vertex_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def labeled_graphs(n: int) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` graphs on ``v0..v{n-1}``, by increasing edge bitmask."""
    names = vertex_names(n)
    pairs = list(combinations(names, 2))
    for mask in range(1 << len(pairs)):
        yield Graph(names, [p for i, p in enumerate(pairs) if mask >> i & 1])


def _refine(cells: list[list[int]], adj: Sequence[int]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts in every cell."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            keyed: dict[tuple, list[int]] = {}
            for v in c:
                key = tuple(bin(adj[v] & m).count("1") for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            out.extend(keyed[k] for k in sorted(keyed))
        cells = out
        if not changed:
            return cells


def canonical_code(n: int, adj: Sequence[int]) -> int:
    """Isomorphism-invariant code of a graph given by adjacency bitmasks.

    Colour refinement followed by individualisation of the first smallest
    non-singleton cell; the code is the largest adjacency bit-string over the
    discrete orderings reached.
    """
    if n == 0:
        return 0
    pairs = list(combinations(range(n), 2))
    start = _refine([list(range(n))], adj)
    best = -1
    stack = [start]
    while stack:
        cells = stack.pop()
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            code = 0
            for i, j in pairs:
                code = (code << 1) | (adj[order[i]] >> order[j] & 1)
            best = max(best, code)
            continue
        idx = min((i for i, c in enumerate(cells) if len(c) > 1),
                  key=lambda i: (len(cells[i]), i))
        for v in cells[idx]:
            rest = [u for u in cells[idx] if u != v]
            stack.append(_refine(cells[:idx] + [[v], rest] + cells[idx + 1:], adj))
    return best


def canonical_key(g: Graph) -> tuple[int, int]:
    names, adj = g.index()
    return len(names), canonical_code(len(names), adj)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[int, ...], ...]:
    """Adjacency tuples, one per isomorphism class on n vertices.

    Orderly-ish generation: every graph arises from one on n-1 vertices by
    adding a vertex of minimum degree.
    """
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    seen: dict[int, tuple[int, ...]] = {}
    new = n - 1
    for base in _classes(n - 1):
        degs = [bin(a).count("1") for a in base]
        for d in range(0, min(degs) + 2 if degs else 1):
            for nbrs in combinations(range(new), d):
                s = set(nbrs)
                if any(degs[u] + (u in s) < d for u in range(new)):
                    continue
                adj = [a | (1 << new) if u in s else a for u, a in enumerate(base)]
                adj.append(sum(1 << u for u in nbrs))
                code = canonical_code(n, adj)
                if code not in seen:
                    seen[code] = tuple(adj)
    return tuple(seen[c] for c in sorted(seen))


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    names = vertex_names(n)
    return [Graph.from_masks(names, adj) for adj in _classes(n)]


def graphs_up_to(n_max: int, n_min: int = 1) -> list[Graph]:
    out: list[Graph] = []
    for n in range(n_min, n_max + 1):
        out.extend(nonisomorphic_graphs(n))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    names = vertex_names(n)
    return Graph(names, [(u, v) for u, v in combinations(names, 2) if rng.random() < p])


def random_graphs(count: int, sizes: Sequence[int], seed: int) -> list[Graph]:
    """``count`` graphs with sizes drawn from ``sizes`` and edge density uniform in [0.2, 0.8]."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(list(sizes))
        out.append(random_graph(n, rng.uniform(0.2, 0.8), rng))
    return out
