"""Exact clique-width and linear clique-width for small graphs.

The search runs over states ``(S, P)``: ``S`` is a vertex subset and ``P`` a
partition of ``S`` into at most ``k`` label classes such that some expression
with at most ``k`` labels produces ``G[S]`` with exactly these classes.  Labels
themselves are quotiented out.

Pruning and normal form:

* Vertices sharing a label are treated identically from then on, so every
  class must consist of twins with respect to ``V - S`` ("homogeneous").
  A subset whose twin classes outnumber ``k`` is dead.
* After a union only ``add`` then ``relabel`` operations are needed: an
  ``add`` issued after some relabels equals a batch of ``add``s before them.
* Feasible partitions are closed under homogeneous coarsening (relabels), so
  each subset only stores the finest feasible partitions.

A union of ``(S1, P1)`` and ``(S2, P2)`` may give a class of each side the
same label.  The merged labelling ``Q`` must have at most ``k`` classes, every
edge between the sides must join two different classes ``C, D`` with
``C x D`` entirely made of edges (an ``add`` is all-or-nothing), and nothing
else is needed.

For the linear variant one operand of every union is a single vertex.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from ..algebra.terms import (
    AddEdges,
    Create,
    CwTerm,
    Relabel,
    Union,
    eval_term,
    is_linear,
    labels_used,
    rename_labels,
    term_width,
)
from ..core.graph import Graph, GraphError
from .rankwidth import SolverBudgetError

__all__ = [
    "CWD_MAX_VERTICES",
    "CWD_MAX_STATES",
    "CwResult",
    "cwd_leq",
    "cwd_exact",
    "lcwd_leq",
    "lcwd_exact",
    "twin_reduction",
    "expand_twins",
]

CWD_MAX_VERTICES = 12
CWD_MAX_STATES = 2_000_000


@dataclass
class CwResult:
    """Outcome of a decision ``width <= k`` or of an exact computation.

    ``witness`` is set whenever ``feasible`` is true.
    """

    k: int
    feasible: bool
    witness: CwTerm | None = None
    states_explored: int = 0
    elapsed: float = 0.0
    kernel_size: int | None = None
    stats: dict = field(default_factory=dict)


def _low(m: int) -> int:
    return m & -m


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _canon(classes) -> tuple[int, ...]:
    return tuple(sorted(classes, key=_low))


def _refines(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    return all(any(a & ~b == 0 for b in q) for a in p)


class _Search:
    def __init__(self, adj: tuple[int, ...], k: int, linear: bool, max_states: int,
                 deadline: float | None):
        self.adj = adj
        self.n = len(adj)
        self.full = (1 << self.n) - 1
        self.k = k
        self.linear = linear
        self.max_states = max_states
        self.deadline = deadline
        self.states: dict[int, dict[tuple[int, ...], tuple | None]] = {}
        self.count = 0
        self._type_cache: dict[int, dict[int, int] | None] = {}

    # twin classes of S with respect to V - S, as vertex -> class id (the class mask)
    def types(self, s: int):
        cached = self._type_cache.get(s, False)
        if cached is not False:
            return cached
        outside = self.full & ~s
        by_nb: dict[int, int] = {}
        for v in _bits(s):
            key = self.adj[v] & outside
            by_nb[key] = by_nb.get(key, 0) | (1 << v)
        if len(by_nb) > self.k:
            result = None
        else:
            result = {}
            for cls in by_nb.values():
                for v in _bits(cls):
                    result[v] = cls
        self._type_cache[s] = result
        return result

    def run(self) -> bool:
        n = self.n
        for v in range(n):
            if self.types(1 << v) is not None:
                self.states[1 << v] = {(1 << v,): None}
        by_size: list[list[int]] = [[] for _ in range(n + 1)]
        for s in range(1, self.full + 1):
            by_size[bin(s).count("1")].append(s)
        for size in range(2, n + 1):
            for s in by_size[size]:
                if self.types(s) is None:
                    continue
                found = self.expand(s)
                if found:
                    self.states[s] = found
                    self.count += len(found)
                    if self.count > self.max_states:
                        raise SolverBudgetError(
                            f"state budget {self.max_states} exhausted", lower_bound=None)
                if self.deadline is not None and time.monotonic() > self.deadline:
                    raise SolverBudgetError("clique-width search ran out of time")
        return self.full in self.states

    def splits(self, s: int):
        if self.linear:
            for v in _bits(s):
                yield s ^ (1 << v), 1 << v
            return
        low = _low(s)
        rest = s ^ low
        sub = rest
        while True:
            a = sub | low
            if a != s:
                yield a, s ^ a
            if sub == 0:
                return
            sub = (sub - 1) & rest

    def expand(self, s: int) -> dict:
        found: dict[tuple[int, ...], tuple] = {}
        for s1, s2 in self.splits(s):
            f1 = self.states.get(s1)
            if not f1:
                continue
            f2 = self.states.get(s2)
            if not f2:
                continue
            for p1 in f1:
                for p2 in f2:
                    for q in self.glue(s, s1, p1, s2, p2):
                        if q not in found:
                            found[q] = (s1, p1, s2, p2)
        if len(found) > 1:
            keys = list(found)
            keep = {}
            for q in keys:
                if not any(r != q and _refines(r, q) for r in keys):
                    keep[q] = found[q]
            found = keep
        return found

    def glue(self, s, s1, p1, s2, p2):
        """Merged labellings Q of (s1, p1) + (s2, p2), finest first."""
        k = self.k
        blocks = list(p1) + list(p2)
        if len(blocks) <= k:
            # different-side blocks are twins w.r.t. the other side, so every
            # cross edge already spans a complete block pair
            yield _canon(blocks)
            return
        tS, t1, t2 = self.types(s), self.types(s1), self.types(s2)
        nb1 = len(p1)
        adj = self.adj
        # block attributes
        stype = [tS[_low(b).bit_length() - 1] for b in blocks]
        side_type = [(t1 if i < nb1 else t2)[_low(b).bit_length() - 1]
                     for i, b in enumerate(blocks)]
        if len(set(stype)) > k:
            return
        m = len(blocks)
        # complete[a][b]: every vertex of a is adjacent to every vertex of b
        complete = [[False] * m for _ in range(m)]
        cross = [[False] * m for _ in range(m)]
        for a in range(m):
            common = self.full
            for v in _bits(blocks[a]):
                common &= adj[v]
            for b in range(m):
                if a == b:
                    continue
                complete[a][b] = blocks[b] & ~common == 0
                if (a < nb1) != (b < nb1):
                    cross[a][b] = any(adj[v] & blocks[b] for v in _bits(blocks[a]))
        # blocks grouped by twin class of S; a class never mixes groups
        order = sorted(range(m), key=lambda i: (_low(stype[i]), i))
        classes: list[list[int]] = []
        out: list[tuple[int, ...]] = []

        def compatible(cls: list[int], b: int) -> bool:
            first = cls[0]
            if stype[first] != stype[b]:
                return False
            same_side = [c for c in cls if (c < nb1) == (b < nb1)]
            if same_side and side_type[same_side[0]] != side_type[b]:
                return False
            return not any(cross[b][c] for c in cls)

        def valid() -> bool:
            for x in range(len(classes)):
                for y in range(x + 1, len(classes)):
                    cx, cy = classes[x], classes[y]
                    if any(cross[a][b] for a in cx for b in cy):
                        if not all(complete[a][b] for a in cx for b in cy):
                            return False
            return True

        def rec(pos: int):
            remaining = m - pos
            if len(classes) + remaining < k:
                return
            if pos == m:
                if len(classes) == k and valid():
                    out.append(_canon(sum_masks(c) for c in classes))
                return
            b = order[pos]
            for cls in classes:
                if compatible(cls, b):
                    cls.append(b)
                    rec(pos + 1)
                    cls.pop()
            if len(classes) < k:
                classes.append([b])
                rec(pos + 1)
                classes.pop()

        def sum_masks(cls):
            t = 0
            for c in cls:
                t |= blocks[c]
            return t

        rec(0)
        yield from out

    # -- witness ----------------------------------------------------------

    def witness(self, names) -> CwTerm:
        s = self.full
        p = next(iter(self.states[s]))
        term, _ = self._build(s, p, names)
        return term

    def _build(self, s: int, p: tuple[int, ...], names):
        back = self.states[s][p]
        if back is None:
            return Create(1, names[s.bit_length() - 1]), {s: 1}
        s1, p1, s2, p2 = back
        q_label = {q: i + 1 for i, q in enumerate(p)}
        sides = []
        for sx, px in ((s1, p1), (s2, p2)):
            t, lab = self._build(sx, px, names)
            groups: dict[int, list[int]] = {}
            for b in px:
                target = next(q_label[q] for q in p if b & ~q == 0)
                groups.setdefault(target, []).append(b)
            mapping = {}
            for target, bs in sorted(groups.items()):
                keep = lab[bs[0]]
                for b in bs[1:]:
                    if lab[b] != keep:
                        t = Relabel(lab[b], keep, t)
                mapping[keep] = target
            others = sorted(labels_used(t) - set(mapping))
            free = [x for x in range(1, self.k + 1) if x not in mapping.values()]
            mapping.update(zip(others, free))
            sides.append(rename_labels(t, mapping))
        term: CwTerm = Union(sides[0], sides[1])
        adj = self.adj
        for x in range(len(p)):
            for y in range(x + 1, len(p)):
                cx, cy = p[x], p[y]
                if (any(adj[v] & cy & s2 for v in _bits(cx & s1))
                        or any(adj[v] & cy & s1 for v in _bits(cx & s2))):
                    term = AddEdges(q_label[cx], q_label[cy], term)
        return term, q_label


# -- twin reduction -------------------------------------------------------

def twin_reduction(g: Graph) -> tuple[Graph, list[tuple[str, str, bool]]]:
    """Repeatedly delete a vertex that has a twin.

    Returns the reduced graph and the removals ``(removed, twin, adjacent)``
    in order.  Clique-width is unchanged (once it is at least 2), and
    :func:`expand_twins` turns an expression for the reduced graph back into
    one for ``g``.
    """
    adj = {v: set(g.neighbours(v)) for v in g.vertices}
    removed: list[tuple[str, str, bool]] = []
    changed = True
    while changed:
        changed = False
        seen: dict[frozenset, str] = {}
        seen_closed: dict[frozenset, str] = {}
        for v in sorted(adj):
            open_nb = frozenset(adj[v])
            closed_nb = open_nb | {v}
            twin, is_adj = seen.get(open_nb), False
            if twin is None:
                twin, is_adj = seen_closed.get(closed_nb), True
            if twin is not None:
                for w in adj.pop(v):
                    adj[w].discard(v)
                removed.append((v, twin, is_adj))
                changed = True
                break
            seen[open_nb] = v
            seen_closed[closed_nb] = v
    kernel = Graph(adj, [(u, w) for u in adj for w in adj[u] if u < w])
    return kernel, removed


def expand_twins(term: CwTerm, removed: list[tuple[str, str, bool]], k: int) -> CwTerm:
    children: dict[str, list[tuple[str, bool]]] = {}
    for v, twin, is_adj in removed:
        children.setdefault(twin, []).append((v, is_adj))

    def expand(name: str, label: int) -> CwTerm:
        t: CwTerm = Create(label, name)
        for v, is_adj in children.get(name, ()):
            if is_adj:
                other = 1 if label != 1 else 2
                t = Relabel(other, label, AddEdges(label, other, Union(t, expand(v, other))))
            else:
                t = Union(t, expand(v, label))
        return t

    if not children:
        return term
    # rebuild bottom-up so deep terms never recurse
    from ..algebra.terms import _postorder

    built: dict[int, CwTerm] = {}
    for node in _postorder(term):
        if isinstance(node, Create):
            new = expand(node.name, node.label)
        elif isinstance(node, Union):
            new = Union(built.pop(id(node.left)), built.pop(id(node.right)))
        elif isinstance(node, AddEdges):
            new = AddEdges(node.i, node.j, built.pop(id(node.child)))
        else:
            new = Relabel(node.i, node.j, built.pop(id(node.child)))
        built[id(node)] = new
    return built[id(term)]


# -- public entry points --------------------------------------------------

def _decide(g: Graph, k: int, linear: bool, max_vertices: int | None, max_states: int,
            reduce: bool, time_limit: float | None) -> CwResult:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if g.num_vertices == 0:
        raise GraphError("clique-width of the empty graph is undefined")
    if max_vertices is not None and g.num_vertices > max_vertices:
        raise SolverBudgetError(
            f"clique-width solver limited to {max_vertices} vertices, got {g.num_vertices}"
            " (raise max_vertices to override)")
    start = time.monotonic()
    deadline = start + time_limit if time_limit is not None else None
    if g.num_edges and k < 2:
        return CwResult(k, False, elapsed=time.monotonic() - start)
    kernel, removed = (twin_reduction(g) if reduce and not linear else (g, []))
    names, adj = kernel.index()
    search = _Search(adj, k, linear, max_states, deadline)
    ok = search.run()
    result = CwResult(k, ok, states_explored=search.count, kernel_size=len(names))
    if ok:
        term = search.witness(names)
        term = expand_twins(term, removed, k)
        _verify(g, term, k, linear)
        result.witness = term
    result.elapsed = time.monotonic() - start
    return result


def _verify(g: Graph, term: CwTerm, k: int, linear: bool) -> None:
    if eval_term(term).graph != g:
        raise AssertionError("internal error: witness does not evaluate to the input graph")
    if term_width(term) > k:
        raise AssertionError("internal error: witness uses too many labels")
    if linear and not is_linear(term):
        raise AssertionError("internal error: witness is not linear")


def cwd_leq(g: Graph, k: int, *, max_vertices: int | None = CWD_MAX_VERTICES,
            max_states: int = CWD_MAX_STATES, reduce: bool = True,
            time_limit: float | None = None) -> CwResult:
    """Decide ``cwd(g) <= k``; on success ``witness`` is a verified k-expression."""
    return _decide(g, k, False, max_vertices, max_states, reduce, time_limit)


def lcwd_leq(g: Graph, k: int, *, max_vertices: int | None = CWD_MAX_VERTICES,
             max_states: int = CWD_MAX_STATES, time_limit: float | None = None) -> CwResult:
    """Decide ``lcwd(g) <= k``; a positive answer carries a linear witness."""
    return _decide(g, k, True, max_vertices, max_states, False, time_limit)


def _exact(decide: Callable[..., CwResult], g: Graph, kwargs) -> CwResult:
    total = 0
    start = time.monotonic()
    k = 1
    while True:
        try:
            res = decide(g, k, **kwargs)
        except SolverBudgetError as exc:
            raise SolverBudgetError(
                f"{exc} while testing k={k}; width is at least {k}", lower_bound=k) from None
        total += res.states_explored
        if res.feasible:
            res.states_explored = total
            res.elapsed = time.monotonic() - start
            return res
        k += 1


def cwd_exact(g: Graph, **kwargs) -> CwResult:
    """Smallest ``k`` with ``cwd(g) <= k``, with its witness expression."""
    return _exact(cwd_leq, g, kwargs)


def lcwd_exact(g: Graph, **kwargs) -> CwResult:
    return _exact(lcwd_leq, g, kwargs)
