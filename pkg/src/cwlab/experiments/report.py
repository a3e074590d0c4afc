from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..core.graph import Graph

__all__ = ["Stage", "PipelineReport", "PipelineFailure"]


class PipelineFailure(Exception):
    """A pipeline stage produced something other than what the construction predicts."""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"{stage}: {message}")


@dataclass
class Stage:
    name: str
    vertices: int | None = None
    edges: int | None = None
    ok: bool = True
    note: str = ""

    @classmethod
    def of(cls, name: str, g: Graph, note: str = "") -> "Stage":
        return cls(name, g.num_vertices, g.num_edges, True, note)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"name": self.name, "ok": self.ok}
        if self.vertices is not None:
            out["vertices"] = self.vertices
            out["edges"] = self.edges
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class PipelineReport:
    pipeline: str
    size: int
    stages: list[Stage] = field(default_factory=list)
    verdict: bool = False
    failed_stage: str | None = None
    widths: dict[str, dict] = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self, timings: bool = False) -> dict:
        out: dict[str, Any] = {
            "pipeline": self.pipeline,
            "size": self.size,
            "verdict": self.verdict,
            "failed_stage": self.failed_stage,
            "stages": [s.to_json() for s in self.stages],
            "widths": self.widths,
        }
        if timings:
            out["elapsed_ms"] = round(self.elapsed * 1000, 3)
        return out

    def summary(self) -> str:
        lines = [f"{self.pipeline}({self.size}): verdict {'PASS' if self.verdict else 'FAIL'}"]
        for s in self.stages:
            stats = f" |V|={s.vertices} |E|={s.edges}" if s.vertices is not None else ""
            mark = "ok" if s.ok else "FAILED"
            lines.append(f"  {s.name:<28}{stats} {mark}{' - ' + s.note if s.note else ''}")
        for name, w in self.widths.items():
            lines.append(f"  {name}: {w['value']}")
        return "\n".join(lines)
