"""Clique-width expressions.

Four node kinds build a labelled graph:

* ``Create(label, name)``     one vertex carrying ``label``
* ``Union(left, right)``      disjoint union
* ``AddEdges(i, j, child)``   join every label-``i`` vertex to every label-``j`` vertex
* ``Relabel(i, j, child)``    label ``i`` becomes label ``j``

Linear terms for large graphs are thousands of nodes deep, so every traversal
here is iterative.  Nodes compare by identity; compare terms through
:func:`to_text` when structural equality is wanted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Union as _U

from ..core.graph import Graph

__all__ = [
    "Create",
    "Union",
    "AddEdges",
    "Relabel",
    "CwTerm",
    "LabeledGraph",
    "TermError",
    "eval_term",
    "term_width",
    "is_linear",
    "count_creates",
    "labels_used",
    "rename_labels",
    "to_text",
    "parse_term",
]


class TermError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Create:
    label: int
    name: str

    def __post_init__(self):
        _check_label(self.label)


@dataclass(frozen=True, eq=False)
class Union:
    left: "CwTerm"
    right: "CwTerm"


@dataclass(frozen=True, eq=False)
class AddEdges:
    i: int
    j: int
    child: "CwTerm"

    def __post_init__(self):
        _check_label(self.i)
        _check_label(self.j)
        if self.i == self.j:
            raise TermError(f"AddEdges needs two distinct labels, got {self.i} twice")


@dataclass(frozen=True, eq=False)
class Relabel:
    i: int
    j: int
    child: "CwTerm"

    def __post_init__(self):
        _check_label(self.i)
        _check_label(self.j)


CwTerm = _U[Create, Union, AddEdges, Relabel]


def _check_label(x) -> None:
    if not isinstance(x, int) or isinstance(x, bool) or x < 1:
        raise TermError(f"labels are positive integers, got {x!r}")


def _children(t: CwTerm) -> tuple:
    if isinstance(t, Create):
        return ()
    if isinstance(t, Union):
        return (t.left, t.right)
    return (t.child,)


def _postorder(t: CwTerm) -> Iterator[CwTerm]:
    stack = [(t, False)]
    while stack:
        node, done = stack.pop()
        if done or isinstance(node, Create):
            yield node
            continue
        stack.append((node, True))
        for c in reversed(_children(node)):
            stack.append((c, False))


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: Mapping[str, int] = field(default_factory=dict)

    def classes(self) -> dict[int, tuple[str, ...]]:
        out: dict[int, list[str]] = {}
        for v in self.graph.vertices:
            out.setdefault(self.labels[v], []).append(v)
        return {k: tuple(v) for k, v in sorted(out.items())}


class _State:
    __slots__ = ("label_of", "members", "edges")

    def __init__(self):
        self.label_of: dict[str, int] = {}
        self.members: dict[int, set[str]] = {}
        self.edges: set[tuple[str, str]] = set()


def eval_term(t: CwTerm) -> LabeledGraph:
    """Evaluate ``t`` to the labelled graph it denotes."""
    results: dict[int, _State] = {}
    for node in _postorder(t):
        if isinstance(node, Create):
            st = _State()
            st.label_of[node.name] = node.label
            st.members[node.label] = {node.name}
        elif isinstance(node, Union):
            a = results.pop(id(node.left))
            b = results.pop(id(node.right))
            if len(a.label_of) < len(b.label_of):
                a, b = b, a
            clash = a.label_of.keys() & b.label_of.keys()
            if clash:
                raise TermError(f"vertex {min(clash)!r} created twice")
            a.label_of.update(b.label_of)
            for lab, vs in b.members.items():
                a.members.setdefault(lab, set()).update(vs)
            a.edges |= b.edges
            st = a
        elif isinstance(node, AddEdges):
            st = results.pop(id(node.child))
            left = st.members.get(node.i, ())
            right = st.members.get(node.j, ())
            st.edges.update((u, v) if u < v else (v, u) for u in left for v in right)
        else:
            st = results.pop(id(node.child))
            moved = st.members.pop(node.i, None)
            if moved and node.i != node.j:
                for v in moved:
                    st.label_of[v] = node.j
                st.members.setdefault(node.j, set()).update(moved)
            elif moved:
                st.members[node.i] = moved
        results[id(node)] = st
    st = results[id(t)]
    return LabeledGraph(Graph(st.label_of, st.edges), dict(sorted(st.label_of.items())))


def labels_used(t: CwTerm) -> set[int]:
    out: set[int] = set()
    for node in _postorder(t):
        if isinstance(node, Create):
            out.add(node.label)
        elif isinstance(node, (AddEdges, Relabel)):
            out.update((node.i, node.j))
    return out


def term_width(t: CwTerm) -> int:
    """Number of distinct labels mentioned anywhere in ``t``."""
    return len(labels_used(t))


def count_creates(t: CwTerm) -> int:
    return sum(1 for node in _postorder(t) if isinstance(node, Create))


def is_linear(t: CwTerm) -> bool:
    """True iff every ``Union`` has an operand containing exactly one ``Create``."""
    creates: dict[int, int] = {}
    ok = True
    for node in _postorder(t):
        if isinstance(node, Create):
            c = 1
        elif isinstance(node, Union):
            a, b = creates.pop(id(node.left)), creates.pop(id(node.right))
            if a != 1 and b != 1:
                ok = False
            c = a + b
        else:
            c = creates.pop(id(node.child))
        creates[id(node)] = c
    return ok


def rename_labels(t: CwTerm, mapping: Mapping[int, int]) -> CwTerm:
    """Apply a label bijection to every node of ``t``; unmapped labels are kept."""
    image = [mapping.get(x, x) for x in labels_used(t)]
    if len(set(image)) != len(image):
        raise TermError("label renaming is not injective on the labels of the term")
    built: dict[int, CwTerm] = {}
    for node in _postorder(t):
        if isinstance(node, Create):
            new = Create(mapping.get(node.label, node.label), node.name)
        elif isinstance(node, Union):
            new = Union(built.pop(id(node.left)), built.pop(id(node.right)))
        elif isinstance(node, AddEdges):
            new = AddEdges(mapping.get(node.i, node.i), mapping.get(node.j, node.j),
                           built.pop(id(node.child)))
        else:
            new = Relabel(mapping.get(node.i, node.i), mapping.get(node.j, node.j),
                          built.pop(id(node.child)))
        built[id(node)] = new
    return built[id(t)]


# -- s-expression text format ------------------------------------------------

def to_text(t: CwTerm) -> str:
    """Print ``t`` as ``(v 1 a)``, ``(u t t)``, ``(add i j t)``, ``(ren i j t)``."""
    out: list[str] = []
    stack: list = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Create):
            out.append(f"(v {item.label} {item.name})")
        elif isinstance(item, Union):
            out.append("(u ")
            stack += [")", item.right, " ", item.left]
        elif isinstance(item, AddEdges):
            out.append(f"(add {item.i} {item.j} ")
            stack += [")", item.child]
        else:
            out.append(f"(ren {item.i} {item.j} ")
            stack += [")", item.child]
    return "".join(out)


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _int(tok: str, pos: int) -> int:
    if not tok.isdigit():
        raise TermError(f"token {pos}: expected a label, got {tok!r}")
    return int(tok)


def parse_term(text: str) -> CwTerm:
    tokens = _TOKEN.findall(text)
    if not tokens:
        raise TermError("empty term")
    # each frame: [op, args(list of ints/strs), children(list of terms), token index]
    stack: list[list] = []
    result = None
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok == "(":
            if i + 1 >= len(tokens):
                raise TermError("unexpected end of input")
            op = tokens[i + 1]
            if op not in ("v", "u", "add", "ren"):
                raise TermError(f"token {i + 1}: unknown operator {op!r}")
            stack.append([op, [], [], i])
            i += 2
            continue
        if tok == ")":
            if not stack:
                raise TermError(f"token {i}: unbalanced ')'")
            op, args, kids, start = stack.pop()
            if op == "v" and len(args) == 2 and not kids:
                node = Create(_int(args[0], start), args[1])
            elif op == "u" and not args and len(kids) == 2:
                node = Union(kids[0], kids[1])
            elif op in ("add", "ren") and len(args) == 2 and len(kids) == 1:
                a, b = _int(args[0], start), _int(args[1], start)
                node = (AddEdges if op == "add" else Relabel)(a, b, kids[0])
            else:
                raise TermError(f"token {start}: malformed ({op} ...)")
            if stack:
                stack[-1][2].append(node)
            elif result is None:
                result = node
            else:
                raise TermError("trailing input after term")
            i += 1
            continue
        if not stack:
            raise TermError(f"token {i}: unexpected {tok!r}")
        if stack[-1][2]:
            raise TermError(f"token {i}: atom {tok!r} after subterm")
        stack[-1][1].append(tok)
        i += 1
    if stack or result is None:
        raise TermError("unexpected end of input")
    return result
