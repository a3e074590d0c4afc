"""The graph families G_n, H_n, H'_n and square grids.

Naming: ``x{i}`` for the pendant/branch vertices, ``y{i}`` for the single
y-vertex of G_n, ``y{i}_{c}`` (c = 1..4) for the copies substituted in H_n and
H'_n, and ``y0`` for the hub of H'_n.  Indices start at 1.
"""

from __future__ import annotations

import re
from itertools import combinations

from ..core.graph import Graph

__all__ = [
    "COPIES",
    "HUB",
    "FamilyError",
    "x_name",
    "y_name",
    "copy_name",
    "parse_name",
    "gen_G",
    "gen_H",
    "gen_Hprime",
    "gen_grid",
    "grid_name",
    "GENERATORS",
    "generate",
]

COPIES = 4
HUB = "y0"

_NAME_RE = re.compile(r"^(x|y)(\d+)(?:_(\d+))?$")


class FamilyError(ValueError):
    pass


def x_name(i: int) -> str:
    return f"x{i}"


def y_name(i: int) -> str:
    return f"y{i}"


def copy_name(i: int, c: int) -> str:
    return f"y{i}_{c}"


def parse_name(name: str) -> tuple[str, int, int | None]:
    """Inverse of the naming helpers: ``"y3_2"`` -> ``("y", 3, 2)``."""
    m = _NAME_RE.match(name)
    if not m:
        raise FamilyError(f"not a family vertex name: {name!r}")
    kind, i, c = m.groups()
    if kind == "x" and c is not None:
        raise FamilyError(f"not a family vertex name: {name!r}")
    return kind, int(i), (int(c) if c is not None else None)


def _check_n(n: int, least: int = 2) -> None:
    if not isinstance(n, int) or n < least:
        raise FamilyError(f"n must be an integer >= {least}, got {n!r}")


def gen_G(n: int) -> Graph:
    """x_i pendant on y_i; the y_i form a clique."""
    _check_n(n)
    vs = [x_name(i) for i in range(1, n + 1)] + [y_name(i) for i in range(1, n + 1)]
    es = [(x_name(i), y_name(i)) for i in range(1, n + 1)]
    es += [(y_name(i), y_name(j)) for i, j in combinations(range(1, n + 1), 2)]
    return Graph(vs, es)


def _grouped(n: int, clique_groups: bool, hub: bool) -> Graph:
    vs = [x_name(i) for i in range(1, n + 1)]
    es = []
    for i in range(1, n + 1):
        group = [copy_name(i, c) for c in range(1, COPIES + 1)]
        vs += group
        es += [(x_name(i), y) for y in group]
        if clique_groups:
            es += list(combinations(group, 2))
    for i, j in combinations(range(1, n + 1), 2):
        es += [(copy_name(i, c), copy_name(j, d))
               for c in range(1, COPIES + 1) for d in range(1, COPIES + 1)]
    if hub:
        vs.append(HUB)
        es += [(HUB, copy_name(i, c)) for i in range(1, n + 1) for c in range(1, COPIES + 1)]
    return Graph(vs, es)


def gen_H(n: int) -> Graph:
    """G_n with every y_i replaced by four pairwise non-adjacent copies."""
    _check_n(n)
    return _grouped(n, clique_groups=False, hub=False)


def gen_Hprime(n: int) -> Graph:
    """G_n with every y_i replaced by a K_4, plus a hub y0 on all copies."""
    _check_n(n)
    return _grouped(n, clique_groups=True, hub=True)


def grid_name(n: int, r: int, c: int) -> str:
    """Row-major name of cell ``(r, c)`` (0-based) of the n x n grid."""
    return x_name(r * n + c + 1)


def gen_grid(n: int) -> Graph:
    _check_n(n)
    vs = [grid_name(n, r, c) for r in range(n) for c in range(n)]
    es = []
    for r in range(n):
        for c in range(n):
            if c + 1 < n:
                es.append((grid_name(n, r, c), grid_name(n, r, c + 1)))
            if r + 1 < n:
                es.append((grid_name(n, r, c), grid_name(n, r + 1, c)))
    return Graph(vs, es)


GENERATORS = {"G": gen_G, "H": gen_H, "Hprime": gen_Hprime, "grid": gen_grid}


def generate(family: str, n: int) -> Graph:
    try:
        gen = GENERATORS[family]
    except KeyError:
        raise FamilyError(
            f"unknown family {family!r}; choose from {', '.join(GENERATORS)}") from None
    return gen(n)
