"""Command-line entry point: ``cwlab <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any, Sequence

from .algebra import to_text as term_text
from .constructions import FamilyError, alpha, generate, grid_coloring
from .core import Graph, GraphError, GraphFormatError, contract_edges
from .corpus import graphs_up_to, random_graphs
from .experiments import (
    Checkpoint,
    CheckpointError,
    WidthCache,
    cograph_closure_check,
    inequality_suite,
    prop1_alt_pipeline,
    prop1_pipeline,
    prop2_property_suite,
    witness_search,
)
from .solvers import SolverBudgetError, cwd_leq, lcwd_leq, rank_width_exact

__all__ = ["run", "main", "UsageError"]

DEFAULT_SEED = 20240101


class UsageError(Exception):
    """Bad arguments or malformed input; reported with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_text(_read(path))
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_names(path: str) -> list[list[str]]:
    """Non-comment lines of a whitespace-separated name file."""
    rows = []
    for lineno, raw in enumerate(_read(path).splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            rows.append((lineno, line))
    return rows


def _load_edges(path: str, g: Graph) -> list[tuple[str, str]]:
    edges = []
    for lineno, parts in _load_names(path):
        if parts[0] == "e":
            parts = parts[1:]
        if len(parts) != 2:
            raise UsageError(f"{path}: line {lineno}: expected two vertex names")
        if not g.has_edge(*parts):
            raise UsageError(f"{path}: line {lineno}: {parts[0]}-{parts[1]} is not an edge")
        edges.append((parts[0], parts[1]))
    return edges


def _load_set(path: str, g: Graph) -> list[str]:
    out = []
    for lineno, parts in _load_names(path):
        for v in parts:
            if v not in g:
                raise UsageError(f"{path}: line {lineno}: unknown vertex {v!r}")
            out.append(v)
    return out


def _graph_id(path: str) -> str:
    return os.path.splitext(os.path.basename(path))[0]


def _graph_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


# -- subcommands: each returns (payload, text, exit code) --------------------

def _cmd_gen(a):
    try:
        g = generate(a.family, a.n)
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    if a.coloring:
        if a.family != "grid":
            raise UsageError("--coloring is only available for the grid family")
        col = grid_coloring(a.n)
        return {"coloring": [[u, v, c] for (u, v), c in sorted(col.color.items())]}, col.to_text(), 0
    return _graph_json(g), g.to_text(), 0


def _cmd_contract(a):
    g = _load_graph(a.graph)
    res = contract_edges(g, _load_edges(a.edges, g))
    payload = _graph_json(res.graph)
    payload["merge_map"] = dict(sorted(res.merge_map.items()))
    return payload, res.graph.to_text(), 0


def _cmd_alpha(a):
    g = _load_graph(a.graph)
    try:
        r = alpha(g, _load_set(a.set, g))
    except GraphError as exc:
        raise UsageError(f"{a.set}: {exc}") from None
    return _graph_json(r), r.to_text(), 0


def _cmd_export_dot(a):
    g = _load_graph(a.graph)
    dot = g.to_dot(_graph_id(a.graph).replace("-", "_") or "G")
    return {"dot": dot}, dot, 0


def _cmd_width(a):
    g = _load_graph(a.graph)
    if g.num_vertices == 0:
        raise UsageError(f"{a.graph}: width of the empty graph is undefined")
    record: dict[str, Any] = {"graph_id": _graph_id(a.graph), "parameter": a.parameter}
    start = time.monotonic()
    if a.parameter == "rwd":
        try:
            res = rank_width_exact(g)
        except SolverBudgetError as exc:
            raise UsageError(str(exc)) from None
        record.update(value=res.value, certificate=res.certificate.to_json(),
                      states_explored=res.states_explored)
        text = f"rwd = {res.value}"
    else:
        decide = cwd_leq if a.parameter == "cwd" else lcwd_leq
        deadline = start + a.budget if a.budget is not None else None
        value, term, states, lower = None, None, 0, 1
        k = 1
        try:
            while a.max_k is None or k <= a.max_k:
                left = None if deadline is None else max(deadline - time.monotonic(), 0.0)
                res = decide(g, k, max_vertices=None, time_limit=left)
                states += res.states_explored
                if res.feasible:
                    value, term = k, res.witness
                    break
                lower = k + 1
                k += 1
        except SolverBudgetError:
            pass
        record.update(value=value, certificate=term_text(term) if term else None,
                      states_explored=states)
        if value is None:
            record["lower_bound"] = lower
            text = f"{a.parameter} >= {lower} (undecided within limits)"
        else:
            text = f"{a.parameter} = {value}\n{record['certificate']}"
    if a.timings:
        record["elapsed_ms"] = round((time.monotonic() - start) * 1000, 3)
    return record, text, 0


def _cmd_pipeline(a):
    fn = prop1_pipeline if a.which == "prop1" else prop1_alt_pipeline
    try:
        rep = fn(a.size)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return rep.to_json(a.timings), rep.summary(), 0 if rep.verdict else 1


def _cmd_check(a):
    if a.which == "cograph-closure":
        try:
            rep = cograph_closure_check(a.max_n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        if not 1 <= a.max_n <= 8:
            raise UsageError("--max-n must lie in 1..8")
        corpus = graphs_up_to(a.max_n)
        if a.random:
            corpus += random_graphs(a.random, (6, 7), a.seed)
        suite = prop2_property_suite if a.which == "prop2" else inequality_suite
        rep = suite(corpus, WidthCache())
    return rep.to_json(), rep.summary(), 0 if rep.passed else 1


def _cmd_witness(a):
    resume = None
    if a.resume:
        try:
            resume = Checkpoint.load(a.resume)
        except CheckpointError as exc:
            raise UsageError(f"{a.resume}: {exc}") from None
        except OSError as exc:
            raise UsageError(f"{a.resume}: {exc.strerror}") from None
    try:
        out = witness_search(a.budget, a.n_max, max_candidates=a.max_candidates,
                             resume=resume, jobs=a.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if a.checkpoint:
        with open(a.checkpoint, "w") as fh:
            ck = out.checkpoint.to_json() if a.timings else out.checkpoint.deterministic_part()
            json.dump(ck, fh, indent=2, sort_keys=True)
            fh.write("\n")
    ck = out.checkpoint
    lines = [f"status: {out.status}",
             f"next: n={ck.n} size={ck.size} index={ck.index}",
             f"candidates examined: {ck.candidates_examined}"]
    if out.witness:
        w = out.witness
        lines.append(f"witness: n={w.n} F={w.F} f={w.f} "
                     f"cwd_before={w.cwd_before} cwd_after={w.cwd_after}")
    return out.to_json(a.timings), "\n".join(lines), 0


# -- parser ------------------------------------------------------------------

def _positive(v: str) -> int:
    try:
        x = int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {v!r}") from None
    if x < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {x}")
    return x


def _seconds(v: str) -> float:
    try:
        x = float(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected seconds, got {v!r}") from None
    if x < 0:
        raise argparse.ArgumentTypeError("budget must be non-negative")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--out", help="write the result here instead of standard output")
    common.add_argument("--format", choices=("json", "text"), help="output format")
    common.add_argument("--timings", action="store_true", help="add elapsed-time fields")

    p = _Parser(prog="cwlab", description="Clique-width and rank-width laboratory.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="generate a family graph")
    s.add_argument("family", help="G, H, Hprime or grid")
    s.add_argument("n", type=_positive)
    s.add_argument("--coloring", action="store_true", help="emit the grid 4-edge-colouring")
    s.set_defaults(func=_cmd_gen, text_default=True)

    s = sub.add_parser("contract", parents=[common], help="contract a set of edges")
    s.add_argument("graph")
    s.add_argument("edges", help="file with one edge 'u v' per line")
    s.set_defaults(func=_cmd_contract, text_default=True)

    s = sub.add_parser("alpha", parents=[common], help="distance-2 graph on a stable set")
    s.add_argument("graph")
    s.add_argument("set", metavar="X", help="file with whitespace-separated vertex names")
    s.set_defaults(func=_cmd_alpha, text_default=True)

    s = sub.add_parser("width", parents=[common], help="exact width with certificate")
    s.add_argument("parameter", choices=("cwd", "lcwd", "rwd"))
    s.add_argument("graph")
    s.add_argument("--max-k", type=_positive, help="give up above this width")
    s.add_argument("--budget", type=_seconds, help="time limit in seconds")
    s.set_defaults(func=_cmd_width, text_default=False)

    s = sub.add_parser("pipeline", parents=[common], help="grid reconstruction pipelines")
    s.add_argument("which", choices=("prop1", "prop1alt"))
    s.add_argument("size", type=int)
    s.set_defaults(func=_cmd_pipeline, text_default=False)

    s = sub.add_parser("check", parents=[common], help="exhaustive property suites")
    s.add_argument("which", choices=("prop2", "cograph-closure", "inequality"))
    s.add_argument("--max-n", type=_positive, default=6)
    s.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="add COUNT seeded random graphs on 6-7 vertices")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=_cmd_check, text_default=False)

    s = sub.add_parser("witness", parents=[common], help="single-edge witness search")
    s.add_argument("--budget", type=_seconds, help="time limit in seconds")
    s.add_argument("--max-candidates", type=int, help="stop after this many matchings")
    s.add_argument("--n-max", type=_positive, default=4)
    s.add_argument("--resume", metavar="CKPT", help="continue from a checkpoint file")
    s.add_argument("--checkpoint", metavar="PATH", help="write the final checkpoint here")
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=_cmd_witness, text_default=False)

    s = sub.add_parser("export-dot", parents=[common], help="graph file to DOT")
    s.add_argument("graph")
    s.set_defaults(func=_cmd_export_dot, text_default=True)
    return p


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        try:
            a = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        payload, text, code = a.func(a)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    fmt = a.format or ("text" if a.text_default else "json")
    body = json.dumps(payload, indent=2, sort_keys=True) + "\n" if fmt == "json" else text
    if not body.endswith("\n"):
        body += "\n"
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(body)
    else:
        stdout.write(body)
    return code


def main() -> None:
    sys.exit(run())
