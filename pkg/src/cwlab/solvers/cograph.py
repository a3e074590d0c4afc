"""Cograph recognition by recursive (co-)connectivity."""

from __future__ import annotations

from ..core.graph import Graph

__all__ = ["is_cograph"]


def _component(start: int, within: int, adj, complement: bool) -> int:
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nb = adj[low.bit_length() - 1]
        if complement:
            nb = ~nb
        new = nb & within & ~seen
        seen |= new
        frontier |= new
    return seen


def _split(s: int, adj, complement: bool) -> list[int]:
    parts = []
    while s:
        comp = _component(s & -s, s, adj, complement)
        parts.append(comp)
        s &= ~comp
    return parts


def is_cograph(g: Graph) -> bool:
    """True iff every induced subgraph on two or more vertices is disconnected
    or has a disconnected complement."""
    _, adj = g.index()
    stack = [(1 << len(adj)) - 1]
    while stack:
        s = stack.pop()
        if s & (s - 1) == 0:
            continue
        parts = _split(s, adj, complement=False)
        if len(parts) == 1:
            parts = _split(s, adj, complement=True)
            if len(parts) == 1:
                return False
        stack.extend(parts)
    return True
