"""Explicit expressions for G_n, H_n and H'_n.

Width-3 builders assemble one group at a time.  The accumulator keeps the
finished y-vertices at label 2 and the finished x-vertices at label 1; a new
group arrives with its y-vertices at label 3 and is wired in with
``add 2 3`` before being folded into label 2.

Width-4 linear builders add one vertex at a time: old y-layer at 2, dead x's
at 1, the group being built at 4 and the arriving vertex at 3.
"""

from __future__ import annotations

from ..constructions.families import COPIES, HUB, _check_n, copy_name, x_name, y_name
from .terms import AddEdges, Create, CwTerm, Relabel, Union

__all__ = [
    "build_term_G",
    "build_term_H",
    "build_term_Hprime",
    "build_linear_term_G",
    "build_linear_term_H",
    "build_linear_term_Hprime",
    "TERM_BUILDERS",
    "LINEAR_TERM_BUILDERS",
]

DEAD, OLD, NEW, GROUP = 1, 2, 3, 4


def _group_names(family: str, i: int) -> list[str]:
    if family == "G":
        return [y_name(i)]
    return [copy_name(i, c) for c in range(1, COPIES + 1)]


def _group_piece(family: str, i: int) -> CwTerm:
    """Group i with its y-vertices at label 3 and x_i attached at label 1."""
    names = _group_names(family, i)
    piece: CwTerm = Create(NEW, names[0])
    for name in names[1:]:
        if family == "Hprime":
            # K_4 inside the group: the newcomer at 1 joins everything at 3
            piece = Relabel(DEAD, NEW, AddEdges(DEAD, NEW, Union(piece, Create(DEAD, name))))
        else:
            piece = Union(piece, Create(NEW, name))
    return AddEdges(DEAD, NEW, Union(piece, Create(DEAD, x_name(i))))


def _build(family: str, n: int) -> CwTerm:
    _check_n(n)
    if family == "Hprime":
        acc: CwTerm = Create(OLD, HUB)
        start = 1
    else:
        acc = Relabel(NEW, OLD, _group_piece(family, 1))
        start = 2
    for i in range(start, n + 1):
        acc = Relabel(NEW, OLD, AddEdges(OLD, NEW, Union(acc, _group_piece(family, i))))
    return acc


def build_term_G(n: int) -> CwTerm:
    return _build("G", n)


def build_term_H(n: int) -> CwTerm:
    return _build("H", n)


def build_term_Hprime(n: int) -> CwTerm:
    return _build("Hprime", n)


def _build_linear(family: str, n: int) -> CwTerm:
    _check_n(n)
    acc: CwTerm | None = Create(OLD, HUB) if family == "Hprime" else None
    for i in range(1, n + 1):
        for name in _group_names(family, i):
            if acc is None:
                acc = Create(GROUP, name)
                continue
            acc = AddEdges(OLD, NEW, Union(acc, Create(NEW, name)))
            if family == "Hprime":
                acc = AddEdges(NEW, GROUP, acc)
            acc = Relabel(NEW, GROUP, acc)
        acc = AddEdges(NEW, GROUP, Union(acc, Create(NEW, x_name(i))))
        acc = Relabel(GROUP, OLD, Relabel(NEW, DEAD, acc))
    return acc


def build_linear_term_G(n: int) -> CwTerm:
    return _build_linear("G", n)


def build_linear_term_H(n: int) -> CwTerm:
    return _build_linear("H", n)


def build_linear_term_Hprime(n: int) -> CwTerm:
    return _build_linear("Hprime", n)


TERM_BUILDERS = {"G": build_term_G, "H": build_term_H, "Hprime": build_term_Hprime}
LINEAR_TERM_BUILDERS = {
    "G": build_linear_term_G,
    "H": build_linear_term_H,
    "Hprime": build_linear_term_Hprime,
}
