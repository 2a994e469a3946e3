"""Request and response models for the HTTP service.

These mirror the scenario document format; validation beyond shape checks
happens in the scenario parser so the CLI and the service share one path.
"""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Number = float | int | str  # plain, decimal string, or "pi/16"-style


class ArchitectureSpec(BaseModel):
    kind: Literal["diagonal", "exchange"]
    n_logical: int = Field(ge=1)
    j0: Number | None = None
    j1: Number | None = None
    jxy: Number | None = None
    jz: Number | None = None

    def to_document(self) -> dict:
        doc = {"kind": self.kind, "n_logical": self.n_logical}
        for key in ("j0", "j1", "jxy", "jz"):
            value = getattr(self, key)
            if value is not None:
                doc[key] = value
        return doc


class SynthesisSpec(BaseModel):
    n_reps: int = Field(default=32, ge=1)


class GateSpec(BaseModel):
    gate: str
    target: int | None = None
    control: int | None = None
    angle: Number | None = None
    matrix: list[list[list[float]]] | None = None

    def to_document(self) -> dict:
        return self.model_dump(exclude_none=True)


class CostModel(BaseModel):
    local_gate_count: int
    evolve_count: int
    total_evolve_time: float
    total_evolve_time_exact: str | None = None  # "pi/16"-style when exact


class CompileRequest(BaseModel):
    architecture: ArchitectureSpec
    gate: GateSpec
    synthesis: SynthesisSpec = SynthesisSpec()


class CompileResponse(BaseModel):
    schedule: dict
    cost: CostModel


class ScenarioSpec(BaseModel):
    architecture: ArchitectureSpec
    initial_bits: list[int] | None = None
    program: list[GateSpec] = []
    synthesis: SynthesisSpec = SynthesisSpec()
    seed: int | None = None
    shots: int = Field(default=0, ge=0)

    def to_document(self) -> dict:
        doc: dict = {"architecture": self.architecture.to_document(),
                     "program": [g.to_document() for g in self.program],
                     "synthesis": {"n_reps": self.synthesis.n_reps},
                     "shots": self.shots}
        if self.initial_bits is not None:
            doc["initial_bits"] = self.initial_bits
        if self.seed is not None:
            doc["seed"] = self.seed
        return doc


class SimulateRequest(BaseModel):
    scenario: ScenarioSpec


class SimulateResponse(BaseModel):
    basis: list[str]
    amplitudes: list[list[float]]
    probabilities: dict[str, float]
    leakage: float
    counts: dict[str, int] | None = None


class VerifyRequest(BaseModel):
    suite: Literal["diagonal", "exchange", "trotter", "costs", "all"]
    ns: list[int] | None = None
    jz_factors: list[float] | None = None


class CheckRowModel(BaseModel):
    suite: str
    case: str
    metric: str
    value: float
    threshold: str
    passed: bool


class VerifyResponse(BaseModel):
    rows: list[CheckRowModel]
    passed: bool


class TrotterSweepRequest(BaseModel):
    jxy: float = 1.0
    ns: list[int] = [8, 16, 32, 64]
    jz_values: list[float] = [0.0, 0.5, 1.0]


class TrotterRowModel(BaseModel):
    n_reps: int
    error: float
    leakage: float
    total_evolve_time: float


class TrotterSweepModel(BaseModel):
    jz: float
    slope: float
    rows: list[TrotterRowModel]


class TrotterSweepResponse(BaseModel):
    sweeps: list[TrotterSweepModel]


class CostRowModel(BaseModel):
    gate: str
    scheme: str
    interaction_time: str
    time_in_inverse_coupling: float
    provenance: str


class CostTableResponse(BaseModel):
    rows: list[CostRowModel]
