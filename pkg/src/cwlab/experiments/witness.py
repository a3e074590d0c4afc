"""Exhaustive search for a matching F of H_n and an edge f in F such that
cwd(H_n / (F - f)) = 3 while cwd(H_n / F) >= 4.

Matchings are enumerated up to the symmetries of H_n that permute the n
groups and the four copies inside each group.  Up to copy permutations a
matching is described by a flag per group (is x_i matched?) and a multigraph
counting the y-y edges between each pair of groups; group permutations act
on both.  Each orbit is realised by one fixed rule (x_i takes copy 1, then
y-y edges take the next free copies, pairs in lexicographic order) and the
orbits of each size are visited in lexicographic order of their realised
sorted edge lists.

The run is resumable: when a budget runs out the search returns a
:class:`Checkpoint` pointing at the next unexamined matching.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Sequence

from ..algebra import to_text
from ..constructions import copy_name, gen_H, parse_name, x_name
from ..core import Graph, contract_edges, edge_key
from ..solvers import CwResult, SolverBudgetError, cwd_leq

__all__ = [
    "CHECKPOINT_VERSION",
    "SEARCH_MAX_N",
    "Checkpoint",
    "CheckpointError",
    "WitnessCandidate",
    "SearchOutcome",
    "Backend",
    "exact_backend",
    "matching_key",
    "orbit_representatives",
    "contracted",
    "witness_search",
]

CHECKPOINT_VERSION = 1
SEARCH_MAX_N = 6  # orbit canonisation enumerates all n! group orders

Edge = tuple[str, str]
Key = tuple[int, ...]
# a cwd <= 3 decision procedure; ``time_limit`` is seconds or None
Backend = Callable[[Graph, "float | None"], CwResult]


def exact_backend(g: Graph, time_limit: float | None = None) -> CwResult:
    return cwd_leq(g, 3, max_vertices=None, time_limit=time_limit)


class CheckpointError(ValueError):
    pass


@dataclass(frozen=True)
class Checkpoint:
    """Position of the next unexamined matching: level ``size`` of H_n, entry ``index``."""

    n: int
    size: int
    index: int
    candidates_examined: int
    elapsed: float = 0.0
    status: str = "budget"

    def cursor(self) -> tuple[int, int, int]:
        return self.n, self.size, self.index

    def to_json(self) -> dict:
        return {
            "version": CHECKPOINT_VERSION,
            "n": self.n,
            "cursor": {"size": self.size, "index": self.index},
            "candidates_examined": self.candidates_examined,
            "elapsed": round(self.elapsed, 3),
            "status": self.status,
        }

    def deterministic_part(self) -> dict:
        out = self.to_json()
        del out["elapsed"]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Checkpoint":
        try:
            if data["version"] != CHECKPOINT_VERSION:
                raise CheckpointError(f"unsupported checkpoint version {data['version']!r}")
            cur = data["cursor"]
            ck = cls(int(data["n"]), int(cur["size"]), int(cur["index"]),
                     int(data["candidates_examined"]), float(data.get("elapsed", 0.0)),
                     str(data.get("status", "budget")))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CheckpointError):
                raise
            raise CheckpointError(f"malformed checkpoint: {exc}") from None
        if ck.n < 2 or ck.size < 1 or ck.index < 0 or ck.candidates_examined < 0:
            raise CheckpointError("checkpoint fields out of range")
        return ck

    @classmethod
    def load(cls, path: str) -> "Checkpoint":
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CheckpointError(
                    f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
        return cls.from_json(data)


@dataclass
class WitnessCandidate:
    n: int
    F: list[Edge]
    f: Edge
    cwd_before: int
    cwd_after: int
    certificates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "F": [list(e) for e in self.F],
            "f": list(self.f),
            "cwd_before": self.cwd_before,
            "cwd_after": self.cwd_after,
            "certificates": self.certificates,
        }


@dataclass
class SearchOutcome:
    """``status`` is ``witness``, ``exhausted`` (all n <= n_max searched) or ``budget``."""

    status: str
    checkpoint: Checkpoint
    witness: WitnessCandidate | None = None
    decisions: int = 0

    def to_json(self, timings: bool = False) -> dict:
        ck = self.checkpoint.to_json() if timings else self.checkpoint.deterministic_part()
        return {
            "status": self.status,
            "checkpoint": ck,
            "witness": self.witness.to_json() if self.witness else None,
        }


# -- orbits of matchings ---------------------------------------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _canon(n: int, flags: Sequence[int], mult: dict[tuple[int, int], int]) -> Key:
    best = None
    pairs = _pairs(n)
    for p in permutations(range(n)):
        # p[i] is the old group placed at position i
        t = tuple(flags[p[i]] for i in range(n)) + tuple(
            mult[min(p[i], p[j]), max(p[i], p[j])] for i, j in pairs)
        if best is None or t < best:
            best = t
    return best


def _unpack(n: int, key: Key):
    pairs = _pairs(n)
    return list(key[:n]), {p: key[n + idx] for idx, p in enumerate(pairs)}


def _degrees(n: int, flags, mult) -> list[int]:
    deg = list(flags)
    for (i, j), c in mult.items():
        deg[i] += c
        deg[j] += c
    return deg


def matching_key(n: int, F: Sequence[Edge]) -> Key:
    """Canonical orbit key of a matching of gen_H(n)."""
    flags = [0] * n
    mult = {p: 0 for p in _pairs(n)}
    for u, v in F:
        (ku, iu, _), (kv, iv, _) = parse_name(u), parse_name(v)
        if "x" in (ku, kv):
            flags[(iu if ku == "x" else iv) - 1] = 1
        else:
            a, b = sorted((iu - 1, iv - 1))
            mult[a, b] += 1
    return _canon(n, flags, mult)


def _realise(n: int, key: Key) -> list[Edge]:
    flags, mult = _unpack(n, key)
    used = [0] * n
    F = []
    for i in range(n):
        if flags[i]:
            used[i] += 1
            F.append(edge_key(x_name(i + 1), copy_name(i + 1, used[i])))
    for (i, j), c in sorted(mult.items()):
        for _ in range(c):
            used[i] += 1
            used[j] += 1
            F.append(edge_key(copy_name(i + 1, used[i]), copy_name(j + 1, used[j])))
    return sorted(F)


@lru_cache(maxsize=None)
def orbit_representatives(n: int) -> tuple[tuple[tuple[Edge, ...], ...], ...]:
    """Level ``s`` lists one matching of size ``s`` per orbit, in lexicographic order."""
    if not 2 <= n <= SEARCH_MAX_N:
        raise ValueError(f"n must lie in 2..{SEARCH_MAX_N}, got {n}")
    pairs = _pairs(n)
    current = {_canon(n, [0] * n, {p: 0 for p in pairs})}
    levels = [current]
    while current:
        nxt = set()
        for key in current:
            flags, mult = _unpack(n, key)
            deg = _degrees(n, flags, mult)
            for i in range(n):
                if not flags[i] and deg[i] < 4:
                    nxt.add(_canon(n, flags[:i] + [1] + flags[i + 1:], mult))
            for p in pairs:
                if deg[p[0]] < 4 and deg[p[1]] < 4:
                    nxt.add(_canon(n, flags, {**mult, p: mult[p] + 1}))
        if nxt:
            levels.append(nxt)
        current = nxt
    return tuple(tuple(sorted(tuple(_realise(n, k)) for k in lv)) for lv in levels)


@lru_cache(maxsize=4)
def _host(n: int) -> Graph:
    return gen_H(n)


def contracted(n: int, F: Sequence[Edge]) -> Graph:
    return contract_edges(_host(n), F).graph


def _decide_worker(args) -> bool:
    n, F = args
    return exact_backend(contracted(n, F)).feasible


# -- search ----------------------------------------------------------------

class _Stop(Exception):
    pass


class _Searcher:
    def __init__(self, backend: Backend, deadline: float | None, jobs: int):
        self.backend = backend
        self.deadline = deadline
        self.jobs = jobs
        self.memo: dict[tuple[int, Key], bool] = {}
        self.decisions = 0

    def remaining(self) -> float | None:
        if self.deadline is None:
            return None
        left = self.deadline - time.monotonic()
        if left <= 0:
            raise _Stop
        return left

    def leq3(self, n: int, F: Sequence[Edge]) -> bool:
        key = (n, matching_key(n, F))
        if key not in self.memo:
            try:
                res = self.backend(contracted(n, F), self.remaining())
            except SolverBudgetError:
                raise _Stop from None
            self.decisions += 1
            self.memo[key] = res.feasible
        return self.memo[key]

    def prefetch(self, pool, n: int, batch: Sequence[Sequence[Edge]]) -> None:
        # workers only fill the memo; the sequential loop still decides in order
        todo = [F for F in batch if (n, matching_key(n, F)) not in self.memo]
        if not todo:
            return
        for F, ok in zip(todo, pool.map(_decide_worker, [(n, F) for F in todo])):
            self.memo[n, matching_key(n, F)] = ok
            self.decisions += 1


def _certify(n: int, F: Sequence[Edge], f: Edge, before: CwResult) -> WitnessCandidate | None:
    g_before = contracted(n, [e for e in F if e != f])
    if cwd_leq(g_before, 2, max_vertices=None).feasible:
        return None
    g_after = contracted(n, F)
    certs = {
        "before_upper": to_text(before.witness),
        "before_lower": "no 2-expression (not a cograph)",
        "after_lower": "no 3-expression (exhaustive search)",
    }
    for k in (4, 5, 6):
        res = cwd_leq(g_after, k, max_vertices=None)
        if res.feasible:
            certs["after_upper"] = to_text(res.witness)
            return WitnessCandidate(n, list(F), f, 3, k, certs)
    raise AssertionError(f"H_{n}/F has clique-width above 6 for F={F}")


def witness_search(time_budget: float | None = None, n_max: int = 4, *,
                   max_candidates: int | None = None, resume: Checkpoint | None = None,
                   jobs: int = 1, backend: Backend | None = None) -> SearchOutcome:
    """Search n = 2..n_max for a single-edge witness.

    ``time_budget`` (seconds) and ``max_candidates`` both stop the run with a
    checkpoint; only the candidate budget makes the stopping point independent
    of machine speed.
    """
    if n_max > SEARCH_MAX_N:
        raise ValueError(f"n_max is limited to {SEARCH_MAX_N}")
    if jobs < 1:
        raise ValueError("jobs must be positive")
    start = time.monotonic()
    deadline = start + time_budget if time_budget is not None else None
    s = _Searcher(backend or exact_backend, deadline, jobs)
    n, size, index = resume.cursor() if resume else (2, 1, 0)
    examined = resume.candidates_examined if resume else 0
    prior = resume.elapsed if resume else 0.0
    base = examined

    def stop(status: str, witness=None) -> SearchOutcome:
        ck = Checkpoint(n, size, index, examined, prior + time.monotonic() - start, status)
        return SearchOutcome(status, ck, witness, s.decisions)

    pool = ProcessPoolExecutor(jobs) if jobs > 1 and backend is None else None
    try:
        while n <= n_max:
            levels = orbit_representatives(n)
            while size < len(levels):
                level = levels[size]
                while index < len(level):
                    if time_budget is not None and time.monotonic() >= deadline:
                        return stop("budget")
                    if max_candidates is not None and examined - base >= max_candidates:
                        return stop("budget")
                    F = level[index]
                    try:
                        if pool is not None:
                            s.prefetch(pool, n, level[index:index + jobs])
                        if not s.leq3(n, F):
                            for f in F:
                                rest = [e for e in F if e != f]
                                if s.leq3(n, rest):
                                    before = s.backend(contracted(n, rest), None)
                                    w = _certify(n, F, f, before)
                                    if w is not None:
                                        examined += 1
                                        index += 1
                                        return stop("witness", w)
                    except _Stop:
                        return stop("budget")
                    examined += 1
                    index += 1
                size, index = size + 1, 0
            n, size, index = n + 1, 1, 0
        return stop("exhausted")
    finally:
        if pool is not None:
            pool.shutdown()
