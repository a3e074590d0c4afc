"""Simple undirected graphs with string vertex names.

A :class:`Graph` is immutable.  Vertices are kept in lexicographic order so
every iteration over a graph is reproducible, and every transformation
returns a new graph.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphError",
    "GraphFormatError",
    "edge_key",
]

_NAME_RE = re.compile(r"^[^\s#()]+$")


class GraphError(ValueError):
    """Raised when an operation is applied to an invalid graph or vertex."""


class GraphFormatError(GraphError):
    """Raised on malformed graph text.  ``line`` is 1-based."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Normalised (sorted) form of the unordered pair ``{u, v}``."""
    return (u, v) if u <= v else (v, u)


class Graph:
    """Finite simple undirected graph.

    >>> g = Graph("abc", [("a", "b"), ("b", "c")])
    >>> g.num_vertices, g.num_edges
    (3, 2)
    >>> sorted(g.neighbours("b"))
    ['a', 'c']
    """

    __slots__ = ("_vertices", "_adj", "_edges", "_index", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Iterable[str]] = ()):
        names = set()
        for v in vertices:
            if not isinstance(v, str) or not _NAME_RE.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
            names.add(v)
        adj: dict[str, set[str]] = {v: set() for v in names}
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop on vertex {u!r}")
            if u not in adj or v not in adj:
                missing = u if u not in adj else v
                raise GraphError(f"edge {u}-{v} uses undeclared vertex {missing!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(sorted(names))
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        self._edges = None
        self._index = None
        self._hash = None

    # -- basic queries ---------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """All edges as sorted ``(u, v)`` pairs with ``u < v``, in sorted order."""
        if self._edges is None:
            self._edges = tuple(
                sorted((u, v) for u in self._vertices for v in self._adj[u] if u < v)
            )
        return self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def neighbours(self, v: str) -> frozenset[str]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self.neighbours(v))

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def check_vertex(self, v: str) -> None:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")

    def check_vertices(self, vs: Iterable[str]) -> None:
        for v in vs:
            self.check_vertex(v)

    def adjacency(self) -> dict[str, frozenset[str]]:
        return dict(self._adj)

    # -- dense view ------------------------------------------------------

    def index(self) -> tuple[tuple[str, ...], tuple[int, ...]]:
        """Dense view: vertex names and adjacency bitmasks (bit i = vertex i)."""
        if self._index is None:
            pos = {v: i for i, v in enumerate(self._vertices)}
            masks = []
            for v in self._vertices:
                m = 0
                for w in self._adj[v]:
                    m |= 1 << pos[w]
                masks.append(m)
            self._index = (self._vertices, tuple(masks))
        return self._index

    @classmethod
    def from_masks(cls, names: Iterable[str], masks: Iterable[int]) -> "Graph":
        names = list(names)
        edges = []
        for i, m in enumerate(masks):
            for j in range(i + 1, len(names)):
                if m >> j & 1:
                    edges.append((names[i], names[j]))
        return cls(names, edges)

    # -- derived graphs ----------------------------------------------------

    def induced_subgraph(self, keep: Iterable[str]) -> "Graph":
        keep = set(keep)
        self.check_vertices(keep)
        return Graph(keep, [(u, v) for u, v in self.edges if u in keep and v in keep])

    def complement(self) -> "Graph":
        vs = self._vertices
        return Graph(
            vs,
            [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))
             if vs[j] not in self._adj[vs[i]]],
        )

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        """Rename vertices; ``mapping`` must be injective on the vertex set."""
        new = [mapping.get(v, v) for v in self._vertices]
        if len(set(new)) != len(new):
            raise GraphError("relabelling is not injective")
        return Graph(new, [(mapping.get(u, u), mapping.get(v, v)) for u, v in self.edges])

    # -- comparison ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(|V|={self.num_vertices}, |E|={self.num_edges})"

    # -- text formats ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"v {v}" for v in self._vertices]
        lines += [f"e {u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """Parse the line format ``v <name>`` / ``e <u> <v>`` with ``#`` comments.

        Duplicate edge lines (in either orientation) are an error.  Vertices
        mentioned only in ``e`` lines are an error as well.
        """
        vertices: list[str] = []
        seen_v: set[str] = set()
        edges: list[tuple[str, str]] = []
        seen_e: dict[tuple[str, str], int] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "v" and len(parts) == 2:
                if parts[1] in seen_v:
                    raise GraphFormatError(f"duplicate vertex {parts[1]!r}", lineno)
                if not _NAME_RE.match(parts[1]):
                    raise GraphFormatError(f"invalid vertex name {parts[1]!r}", lineno)
                seen_v.add(parts[1])
                vertices.append(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                u, v = parts[1], parts[2]
                if u == v:
                    raise GraphFormatError(f"loop on {u!r}", lineno)
                key = edge_key(u, v)
                if key in seen_e:
                    raise GraphFormatError(
                        f"duplicate edge {u}-{v} (first at line {seen_e[key]})", lineno)
                seen_e[key] = lineno
                edges.append(key)
            else:
                raise GraphFormatError(f"cannot parse {raw.strip()!r}", lineno)
        for (u, v), lineno in seen_e.items():
            for w in (u, v):
                if w not in seen_v:
                    raise GraphFormatError(f"edge uses undeclared vertex {w!r}", lineno)
        return cls(vertices, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f'  "{v}";' for v in self._vertices]
        lines += [f'  "{u}" -- "{v}";' for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"
