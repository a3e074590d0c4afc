"""Scripts of vertex operations and their rewriting into vertex-minor form.

A script is a sequence of ``(op, vertex)`` steps with ``op`` one of
``"delete"``, ``"erase"`` or ``"lc"`` (local complementation).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..core.graph import Graph, GraphError
from ..core.ops import delete_vertices, erase_vertex, local_complement

__all__ = ["ScriptError", "Step", "apply_step", "apply_script", "itm_as_vertex_minor"]

Step = tuple[str, str]


class ScriptError(GraphError):
    def __init__(self, index: int, message: str):
        self.index = index
        super().__init__(f"step {index}: {message}")


def apply_step(g: Graph, step: Step) -> Graph:
    op, v = step
    if op == "delete":
        return delete_vertices(g, [v])
    if op == "erase":
        return erase_vertex(g, v)
    if op == "lc":
        return local_complement(g, v)
    raise GraphError(f"unknown operation {op!r}")


def apply_script(g: Graph, script: Iterable[Step]) -> Graph:
    for k, step in enumerate(script):
        try:
            g = apply_step(g, step)
        except GraphError as exc:
            raise ScriptError(k, str(exc)) from exc
    return g


def itm_as_vertex_minor(g: Graph, script: Sequence[Step]) -> list[Step]:
    """Rewrite an erase/delete script into an equivalent lc/delete script.

    Erasing ``x`` whose neighbours are adjacent is a deletion; otherwise it
    is a local complementation at ``x`` followed by deleting ``x``.
    """
    out: list[Step] = []
    for k, (op, v) in enumerate(script):
        if op not in ("erase", "delete"):
            raise ScriptError(k, f"only erase/delete steps allowed, got {op!r}")
        if v not in g:
            raise ScriptError(k, f"unknown vertex {v!r}")
        if op == "erase":
            nbrs = sorted(g.neighbours(v))
            if len(nbrs) != 2:
                raise ScriptError(k, f"cannot erase {v!r}: degree is {len(nbrs)}, not 2")
            if not g.has_edge(*nbrs):
                out.append(("lc", v))
            out.append(("delete", v))
            g = erase_vertex(g, v)
        else:
            out.append(("delete", v))
            g = delete_vertices(g, [v])
    return out
