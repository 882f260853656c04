"""Result types shared by the sparse pipeline and the top-level solver."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import ExceptionalKind
from .labeling import Configuration, config_to_json
from .lemmas import ReductionTrace


class SolverError(RuntimeError):
    """An internal invariant of the construction failed."""


class Status(str, Enum):
    CONFIGURED = "configured"
    EXCEPTIONAL = "exceptional"
    PRECONDITION_FAILED = "precondition_failed"


@dataclass
class ComponentResult:
    vertices: tuple[int, ...]
    status: Status
    kind: ExceptionalKind | None = None
    reason: str | None = None
    witness: tuple[int, ...] = ()

    def to_json(self, f: Configuration | None = None) -> dict:
        out: dict = {"vertices": list(self.vertices), "status": self.status.value}
        if self.kind is not None:
            out["kind"] = self.kind.value
        if self.reason is not None:
            out["reason"] = self.reason
            out["witness"] = list(self.witness)
        if f is not None and self.status is Status.CONFIGURED:
            out["labels"] = config_to_json({v: f[v] for v in self.vertices})
        return out


@dataclass
class SolveResult:
    """Per-component outcomes plus one configuration covering the configured ones."""

    components: list[ComponentResult]
    configuration: Configuration = field(default_factory=dict)
    trace: ReductionTrace = field(default_factory=ReductionTrace)

    @property
    def status(self) -> Status:
        kinds = {c.status for c in self.components}
        if Status.PRECONDITION_FAILED in kinds:
            return Status.PRECONDITION_FAILED
        if Status.EXCEPTIONAL in kinds:
            return Status.EXCEPTIONAL
        return Status.CONFIGURED

    @property
    def configured(self) -> bool:
        return self.status is Status.CONFIGURED

    @property
    def exceptional(self) -> dict[int, ExceptionalKind]:
        return {i: c.kind for i, c in enumerate(self.components) if c.kind is not None}

    def reasons(self) -> list[str]:
        return [c.reason for c in self.components if c.reason]
