"""Independent brute-force oracles used by the test-suite.

None of these share code with the solvers under test.
"""

from __future__ import annotations

from itertools import combinations, permutations


def _pair_index(n):
    pid = {}
    for idx, (u, v) in enumerate(combinations(range(n), 2)):
        pid[u, v] = pid[v, u] = idx
    return pid


def _canon_labels(labels):
    seen = {}
    return tuple(seen.setdefault(x, len(seen) + 1) for x in labels)


def expression_closure(n: int, k: int, linear: bool = False):
    """Every (edge bitmask, labelling) producible on vertex set ``range(n)``.

    Works bottom-up over vertex subsets with explicit expressions: a subset's
    states come from unions of states of two complementary subsets (one a
    singleton when ``linear``) under every injective matching of labels,
    followed by closure under all add/relabel operations.  Labellings are
    stored up to renaming of labels.
    """
    pid = _pair_index(n)
    reach: dict[tuple[int, ...], set] = {}
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            if size == 1:
                states = {(0, (1,))}
            else:
                states = set()
                pos = {v: i for i, v in enumerate(subset)}
                first = subset[0]
                rest = subset[1:]
                splits = []
                if linear:
                    splits = [(tuple(u for u in subset if u != v), (v,)) for v in subset]
                else:
                    for r in range(0, len(rest)):
                        for extra in combinations(rest, r):
                            a = (first,) + extra
                            b = tuple(u for u in subset if u not in a)
                            splits.append((a, b))
                for a, b in splits:
                    for ea, la in reach[a]:
                        for eb, lb in reach[b]:
                            nb = max(lb)
                            for image in permutations(range(1, k + 1), nb):
                                labels = [0] * size
                                for i, v in enumerate(a):
                                    labels[pos[v]] = la[i]
                                for i, v in enumerate(b):
                                    labels[pos[v]] = image[lb[i] - 1]
                                states.add((ea | eb, _canon_labels(labels)))
            reach[subset] = _close(subset, states, k, pid)
    return reach


def _close(subset, states, k, pid):
    seen = set(states)
    todo = list(states)
    while todo:
        edges, labels = todo.pop()
        present = sorted(set(labels))
        nxt = []
        for i in present:
            for j in present:
                if i < j:
                    e = edges
                    for x, lx in enumerate(labels):
                        if lx == i:
                            for y, ly in enumerate(labels):
                                if ly == j:
                                    e |= 1 << pid[subset[x], subset[y]]
                    nxt.append((e, labels))
            for j in range(1, k + 1):
                if j != i:
                    nxt.append((edges, _canon_labels(j if x == i else x for x in labels)))
        for st in nxt:
            if max(st[1]) <= k and st not in seen:
                seen.add(st)
                todo.append(st)
    return seen


def oracle_widths(n: int, linear: bool = False) -> dict[int, int]:
    """Map edge bitmask (over pairs of ``range(n)``) -> exact (linear) clique-width."""
    total = n * (n - 1) // 2
    result: dict[int, int] = {}
    k = 1
    while len(result) < 1 << total:
        reach = expression_closure(n, k, linear)
        for edges, _ in reach[tuple(range(n))]:
            result.setdefault(edges, k)
        k += 1
    return result


def brute_rank_width(n: int, adj: list[int]) -> int:
    """Rank-width by enumerating every subcubic tree shape (n <= 6)."""

    def rank(rows):
        rows = list(rows)
        r = 0
        for bit in range(n):
            piv = next((i for i, x in enumerate(rows) if x >> bit & 1), None)
            if piv is None:
                continue
            p = rows.pop(piv)
            rows = [x ^ p if x >> bit & 1 else x for x in rows]
            r += 1
        return r

    full = (1 << n) - 1

    def cr(m):
        return rank(adj[v] & ~m & full for v in range(n) if m >> v & 1)

    if n == 1:
        return 0
    # every branch decomposition is obtained by inserting leaves one at a time
    # into edges of a smaller one, starting from the single edge between leaves 0 and 1
    best = None
    trees = [[(0, 1)]]
    nodes_next = [n]
    for leaf in range(2, n):
        new_trees = []
        for edges, nxt in zip(trees, nodes_next):
            for idx, (a, b) in enumerate(edges):
                mid = nxt
                e = edges[:idx] + edges[idx + 1:] + [(a, mid), (mid, b), (mid, leaf)]
                new_trees.append((e, nxt + 1))
        trees = [t for t, _ in new_trees]
        nodes_next = [x for _, x in new_trees]
    for edges in trees:
        adjt = {}
        for a, b in edges:
            adjt.setdefault(a, []).append(b)
            adjt.setdefault(b, []).append(a)
        width = 0
        for a, b in edges:
            # leaves reachable from b without crossing a
            side, stack, seen = 0, [b], {a, b}
            while stack:
                x = stack.pop()
                if x < n:
                    side |= 1 << x
                for y in adjt[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            width = max(width, cr(side))
        best = width if best is None else min(best, width)
    return best



def targeted_width_leq(n: int, adj: list[int], k: int, linear: bool = False) -> bool:
    """Does some (linear) k-expression evaluate to the graph with adjacency ``adj``?

    Same enumeration as :func:`expression_closure`, except that operations
    creating a non-edge of the target are discarded and a subset keeps only
    labellings whose graph is the full induced subgraph (an expression never
    removes an edge).  Tractable for single graphs up to about 9 vertices.
    """
    full = (1 << n) - 1
    reach: dict[int, set] = {}
    for s in sorted(range(1, full + 1), key=lambda m: (bin(m).count("1"), m)):
        members = [v for v in range(n) if s >> v & 1]
        if len(members) == 1:
            reach[s] = {(1,)}
            continue
        low = s & -s
        if linear:
            splits = [(s ^ (1 << v), 1 << v) for v in members]
        else:
            splits = []
            rest = s ^ low
            a = rest
            while True:
                if (a | low) != s:
                    splits.append((a | low, s ^ (a | low)))
                if a == 0:
                    break
                a = (a - 1) & rest
        pos = {v: i for i, v in enumerate(members)}
        states = set()
        for a, b in splits:
            if not reach[a] or not reach[b]:
                continue
            inside = _edges_within(members, a, adj) | _edges_within(members, b, adj)
            am = [v for v in members if a >> v & 1]
            bm = [v for v in members if b >> v & 1]
            for la in reach[a]:
                for lb in reach[b]:
                    for image in permutations(range(1, k + 1), max(lb)):
                        labels = [0] * len(members)
                        for i, v in enumerate(am):
                            labels[pos[v]] = la[i]
                        for i, v in enumerate(bm):
                            labels[pos[v]] = image[lb[i] - 1]
                        states.add((inside, _canon_labels(labels)))
        want = _edges_within(members, s, adj)
        reach[s] = {lab for e, lab in _close_targeted(members, states, k, adj) if e == want}
    return bool(reach[full])


def _edges_within(members, s, adj):
    return frozenset((u, v) for u in members for v in members
                     if u < v and s >> u & 1 and s >> v & 1 and adj[u] >> v & 1)


def _close_targeted(members, states, k, adj):
    seen = set(states)
    todo = list(states)
    while todo:
        edges, labels = todo.pop()
        present = sorted(set(labels))
        nxt = []
        for i in present:
            for j in present:
                if i < j:
                    new = {(min(members[x], members[y]), max(members[x], members[y]))
                           for x, lx in enumerate(labels) if lx == i
                           for y, ly in enumerate(labels) if ly == j}
                    if all(adj[u] >> v & 1 for u, v in new):
                        nxt.append((edges | new, labels))
            for j in range(1, k + 1):
                if j != i:
                    nxt.append((edges, _canon_labels(j if x == i else x for x in labels)))
        for st in nxt:
            if max(st[1]) <= k and st not in seen:
                seen.add(st)
                todo.append(st)
    return seen
