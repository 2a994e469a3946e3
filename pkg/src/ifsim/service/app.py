"""HTTP service exposing the compiler, the simulator and the verification
suites.  The CLI calls the same handlers in process; run standalone with

    uvicorn ifsim.service.app:app
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..pirational import PiRational
from ..scenario import (
    Scenario,
    ScenarioError,
    compile_call,
    parse_architecture,
    parse_scenario,
    run_scenario,
    parse_gate,
)
from ..exchange import SynthesisParams
from ..model import DiagonalChain
from ..schedule import CostReport, accounting, serialize
from ..verify import (
    cost_comparison,
    rows_to_json,
    run_suite,
    trotter_sweep,
)
from .models import (
    CheckRowModel,
    CompileRequest,
    CompileResponse,
    CostModel,
    CostRowModel,
    CostTableResponse,
    SimulateRequest,
    SimulateResponse,
    TrotterRowModel,
    TrotterSweepModel,
    TrotterSweepRequest,
    TrotterSweepResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="ifsim",
    version=__version__,
    description="Pulse compiler and exact simulator for chains with fixed, "
                "always-on couplings (interaction-free subspace encodings).",
)


def _cost_model(cost: CostReport) -> CostModel:
    exact = str(cost.total_evolve_time) if isinstance(cost.total_evolve_time,
                                                      PiRational) else None
    return CostModel(
        local_gate_count=cost.local_gate_count,
        evolve_count=cost.evolve_count,
        total_evolve_time=float(cost.total_evolve_time),
        total_evolve_time_exact=exact,
    )


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/compile", response_model=CompileResponse)
def compile_gate(request: CompileRequest) -> CompileResponse:
    try:
        arch = parse_architecture(request.architecture.to_document())
        kind = "diagonal" if isinstance(arch, DiagonalChain) else "exchange"
        call = parse_gate(request.gate.to_document(), arch.n_logical, kind, "gate")
        sched = compile_call(arch, call, SynthesisParams(request.synthesis.n_reps))
    except ScenarioError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return CompileResponse(schedule=serialize(sched), cost=_cost_model(accounting(sched)))


@app.post("/simulate", response_model=SimulateResponse)
def simulate(request: SimulateRequest) -> SimulateResponse:
    try:
        scenario = parse_scenario(request.scenario.to_document())
        result = run_scenario(scenario)
    except ScenarioError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    doc = result.to_document()
    return SimulateResponse(**doc)


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    rows = run_suite(request.suite, ns=request.ns, jz_factors=request.jz_factors)
    payload = rows_to_json(rows)
    return VerifyResponse(
        rows=[CheckRowModel(suite=r["suite"], case=r["case"], metric=r["metric"],
                            value=r["value"], threshold=r["threshold"],
                            passed=r["pass"]) for r in payload["rows"]],
        passed=payload["passed"],
    )


@app.post("/trotter-sweep", response_model=TrotterSweepResponse)
def sweep(request: TrotterSweepRequest) -> TrotterSweepResponse:
    try:
        sweeps = trotter_sweep(request.jxy, tuple(request.jz_values),
                               tuple(request.ns))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    return TrotterSweepResponse(sweeps=[
        TrotterSweepModel(
            jz=s.jz, slope=s.slope,
            rows=[TrotterRowModel(n_reps=r.n_reps, error=r.error,
                                  leakage=r.leakage,
                                  total_evolve_time=r.total_evolve_time)
                  for r in s.rows],
        )
        for s in sweeps
    ])


@app.get("/costs", response_model=CostTableResponse)
def costs() -> CostTableResponse:
    return CostTableResponse(rows=[
        CostRowModel(gate=r.gate, scheme=r.scheme,
                     interaction_time=r.interaction_time,
                     time_in_inverse_coupling=r.time_in_inverse_coupling,
                     provenance=r.provenance)
        for r in cost_comparison()
    ])
