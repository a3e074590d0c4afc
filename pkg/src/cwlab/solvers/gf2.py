"""Linear algebra over GF(2) on rows packed into Python ints."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..core.graph import Graph

__all__ = ["Gf2Matrix", "gf2_rank", "rank_of_rows", "cut_rank", "cut_rank_mask"]


@dataclass(frozen=True)
class Gf2Matrix:
    """``rows x cols`` bit matrix; ``data[r]`` bit ``c`` is entry ``(r, c)``."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:b} does not fit in {self.cols} columns")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        cols = len(entries[0]) if entries else 0
        data = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            data.append(sum((x & 1) << c for c, x in enumerate(row)))
        return cls(len(entries), cols, tuple(data))

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of packed bit rows by elimination against pivots on the highest bit."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = r
                break
            r ^= p
    return len(pivots)


def gf2_rank(m: Gf2Matrix) -> int:
    return rank_of_rows(m.data)


def cut_rank_mask(adj: Sequence[int], x: int, full: int) -> int:
    """Cut-rank of the vertex set ``x`` (bitmask) for adjacency bitmasks ``adj``."""
    rest = full & ~x
    rows = []
    i = 0
    while x >> i:
        if x >> i & 1:
            rows.append(adj[i] & rest)
        i += 1
    return rank_of_rows(rows)


def cut_rank(g: Graph, x: Iterable[str]) -> int:
    """GF(2) rank of the adjacency submatrix between ``x`` and its complement."""
    x = set(x)
    g.check_vertices(x)
    names, adj = g.index()
    mask = sum(1 << i for i, v in enumerate(names) if v in x)
    return cut_rank_mask(adj, mask, (1 << len(names)) - 1)
