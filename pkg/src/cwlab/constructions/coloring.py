"""Proper edge colourings with colours 1..4."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..core.graph import Graph, GraphFormatError, edge_key
from .families import _check_n, gen_grid, grid_name

__all__ = ["MAX_COLORS", "ColoringError", "ProperEdgeColoring", "grid_coloring"]

MAX_COLORS = 4


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class ProperEdgeColoring:
    """A colour in 1..4 for every edge of ``base``; edges sharing an endpoint differ."""

    base: Graph
    color: Mapping[tuple[str, str], int]

    def __post_init__(self):
        color = {edge_key(*e): c for e, c in self.color.items()}
        if set(color) != set(self.base.edges):
            extra = sorted(set(color) - set(self.base.edges))
            missing = sorted(set(self.base.edges) - set(color))
            raise ColoringError(f"colouring does not match the edges (extra {extra}, missing {missing})")
        for e, c in color.items():
            if not isinstance(c, int) or not 1 <= c <= MAX_COLORS:
                raise ColoringError(f"edge {e[0]}-{e[1]} has colour {c!r} outside 1..{MAX_COLORS}")
        for v in self.base.vertices:
            seen: dict[int, str] = {}
            for w in sorted(self.base.neighbours(v)):
                c = color[edge_key(v, w)]
                if c in seen:
                    raise ColoringError(
                        f"edges {v}-{seen[c]} and {v}-{w} share vertex {v} and colour {c}")
                seen[c] = w
        object.__setattr__(self, "color", dict(sorted(color.items())))

    def of(self, u: str, v: str) -> int:
        return self.color[edge_key(u, v)]

    def to_text(self) -> str:
        return "".join(f"c {u} {v} {c}\n" for (u, v), c in self.color.items())

    @classmethod
    def from_text(cls, base: Graph, text: str) -> "ProperEdgeColoring":
        color: dict[tuple[str, str], int] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4 or parts[0] != "c" or not parts[3].isdigit():
                raise GraphFormatError(f"cannot parse {raw.strip()!r}", lineno)
            key = edge_key(parts[1], parts[2])
            if key in color:
                raise GraphFormatError(f"edge {key[0]}-{key[1]} coloured twice", lineno)
            color[key] = int(parts[3])
        return cls(base, color)


def grid_coloring(n: int) -> ProperEdgeColoring:
    """Horizontal edges alternate colours 1/2 by column, vertical ones 3/4 by row."""
    _check_n(n)
    color = {}
    for r in range(n):
        for c in range(n):
            if c + 1 < n:
                color[edge_key(grid_name(n, r, c), grid_name(n, r, c + 1))] = 1 if c % 2 == 0 else 2
            if r + 1 < n:
                color[edge_key(grid_name(n, r, c), grid_name(n, r + 1, c))] = 3 if r % 2 == 0 else 4
    return ProperEdgeColoring(gen_grid(n), color)
