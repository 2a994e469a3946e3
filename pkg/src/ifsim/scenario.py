"""Scenario configuration: one JSON document describing an architecture, an
initial encoding, a logical gate program, synthesis depth, seeds and shots.

Numbers may be written symbolically ("pi/16") so compiled schedules keep
exact accounting.  Parse errors name the offending field.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .encoding import code_isometry, encode, leakage as code_leakage, code_for
from .exchange import (
    SynthesisParams,
    cphase_logical_exchange,
    local_logical_gate_exchange,
    synth_swap,
)
from .ising import cnot_logical, cphase_logical, hadamard_logical, rz_logical
from .model import Architecture, DiagonalChain, ExchangeChain
from .pirational import PiRational, parse_scalar
from .schedule import PulseSchedule, execute, rotation_matrix
from .statevector import HADAMARD_2, PAULI, unitarity_residual


class ScenarioError(ValueError):
    """Bad scenario document; the message names the field."""


@dataclass(frozen=True, eq=False)
class GateCall:
    gate: str
    targets: tuple[int, ...]
    angle: PiRational | float | None = None
    matrix: np.ndarray | None = None


@dataclass(frozen=True, eq=False)
class Scenario:
    arch: Architecture
    initial_bits: tuple[int, ...]
    program: tuple[GateCall, ...]
    synthesis: SynthesisParams = SynthesisParams()
    seed: int | None = None
    shots: int = 0


def _field(doc: dict, key: str, path: str, required: bool = True, default=None):
    if key not in doc:
        if required:
            raise ScenarioError(f"{path}.{key}: missing field")
        return default
    return doc[key]


def _number(value, path: str) -> PiRational | float:
    try:
        return parse_scalar(value)
    except ValueError as exc:
        raise ScenarioError(f"{path}: {exc}") from None


def _coupling(doc: dict, key: str, path: str) -> float:
    value = float(_number(_field(doc, key, path), f"{path}.{key}"))
    if not value > 0:
        raise ScenarioError(f"{path}.{key}: coupling must be positive, got {value}")
    return value


def parse_architecture(doc, path: str = "architecture") -> Architecture:
    if not isinstance(doc, dict):
        raise ScenarioError(f"{path}: expected an object")
    kind = _field(doc, "kind", path)
    n_logical = _field(doc, "n_logical", path)
    if not isinstance(n_logical, int) or isinstance(n_logical, bool) or n_logical < 1:
        raise ScenarioError(f"{path}.n_logical: must be a positive integer")
    try:
        if kind == "diagonal":
            return DiagonalChain(n_logical=n_logical,
                                 j0=_coupling(doc, "j0", path),
                                 j1=_coupling(doc, "j1", path))
        if kind == "exchange":
            jz_raw = _field(doc, "jz", path, required=False, default=0.0)
            jz = float(_number(jz_raw, f"{path}.jz"))
            if jz < 0:
                raise ScenarioError(f"{path}.jz: must be >= 0, got {jz}")
            return ExchangeChain(n_logical=n_logical,
                                 jxy=_coupling(doc, "jxy", path), jz=jz)
    except ValueError as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(f"{path}: {exc}") from None
    raise ScenarioError(f"{path}.kind: unknown architecture kind {kind!r}")


_NAMED_LOCALS = {"x": PAULI["x"], "y": PAULI["y"], "z": PAULI["z"], "h": HADAMARD_2}


def parse_gate(doc, width: int, kind: str, path: str) -> GateCall:
    if not isinstance(doc, dict):
        raise ScenarioError(f"{path}: expected an object")
    gate = _field(doc, "gate", path)
    if not isinstance(gate, str):
        raise ScenarioError(f"{path}.gate: expected a string")

    def target(key="target"):
        t = _field(doc, key, path)
        if not isinstance(t, int) or isinstance(t, bool) or not 0 <= t < width:
            raise ScenarioError(f"{path}.{key}: must be a logical index < {width}")
        return t

    if kind == "diagonal":
        if gate == "rz":
            return GateCall("rz", (target(),), angle=_number(_field(doc, "angle", path),
                                                             f"{path}.angle"))
        if gate == "hadamard":
            return GateCall("hadamard", (target(),))
        if gate == "cphase":
            return GateCall("cphase", (target("control"), target("target")))
        if gate == "cnot":
            return GateCall("cnot", (target("control"), target("target")))
    else:
        if gate == "cphase":
            return GateCall("cphase", (target("control"), target("target")))
        if gate == "swap":
            # synthesis primitive: star k <-> first dot of its right isolator
            return GateCall("swap", (target(),))
        if gate in _NAMED_LOCALS:
            return GateCall("local", (target(),), matrix=_NAMED_LOCALS[gate])
        if gate == "rz" or gate == "rx" or gate == "ry":
            angle = _number(_field(doc, "angle", path), f"{path}.angle")
            return GateCall("local", (target(),),
                            matrix=rotation_matrix(gate[1], angle))
        if gate == "local":
            raw = _field(doc, "matrix", path)
            try:
                m = np.array([[complex(*map(float, cell)) for cell in row]
                              for row in raw], dtype=complex)
            except (TypeError, ValueError):
                raise ScenarioError(
                    f"{path}.matrix: expected a 2x2 nested list of [re, im] pairs"
                ) from None
            if m.shape != (2, 2):
                raise ScenarioError(f"{path}.matrix: expected a 2x2 matrix")
            if unitarity_residual(m) > 1e-10:
                raise ScenarioError(f"{path}.matrix: matrix is not unitary")
            return GateCall("local", (target(),), matrix=m)
    raise ScenarioError(f"{path}.gate: unknown gate {gate!r} for {kind} architecture")


def parse_scenario(doc) -> Scenario:
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ScenarioError("scenario document must be an object")
    arch = parse_architecture(_field(doc, "architecture", "scenario"))
    kind = "diagonal" if isinstance(arch, DiagonalChain) else "exchange"

    bits_raw = _field(doc, "initial_bits", "scenario", required=False,
                      default=[0] * arch.n_logical)
    if (not isinstance(bits_raw, list) or len(bits_raw) != arch.n_logical
            or any(b not in (0, 1) for b in bits_raw)):
        raise ScenarioError(
            f"scenario.initial_bits: expected {arch.n_logical} bits of 0/1"
        )

    program_raw = _field(doc, "program", "scenario", required=False, default=[])
    if not isinstance(program_raw, list):
        raise ScenarioError("scenario.program: expected a list")
    program = tuple(
        parse_gate(entry, arch.n_logical, kind, f"scenario.program[{i}]")
        for i, entry in enumerate(program_raw)
    )

    synth_raw = _field(doc, "synthesis", "scenario", required=False, default={})
    if not isinstance(synth_raw, dict):
        raise ScenarioError("scenario.synthesis: expected an object")
    n_reps = synth_raw.get("n_reps", 32)
    if not isinstance(n_reps, int) or isinstance(n_reps, bool) or n_reps < 1:
        raise ScenarioError("scenario.synthesis.n_reps: must be a positive integer")

    seed = _field(doc, "seed", "scenario", required=False)
    if seed is not None and (not isinstance(seed, int) or isinstance(seed, bool)):
        raise ScenarioError("scenario.seed: must be an integer")
    shots = _field(doc, "shots", "scenario", required=False, default=0)
    if not isinstance(shots, int) or isinstance(shots, bool) or shots < 0:
        raise ScenarioError("scenario.shots: must be a nonnegative integer")

    return Scenario(arch=arch, initial_bits=tuple(bits_raw), program=program,
                    synthesis=SynthesisParams(n_reps), seed=seed, shots=shots)


def compile_call(arch: Architecture, call: GateCall,
                 params: SynthesisParams) -> PulseSchedule:
    """Lower one logical gate request to a pulse schedule."""
    try:
        if isinstance(arch, DiagonalChain):
            if call.gate == "rz":
                return rz_logical(arch, call.targets[0], call.angle)
            if call.gate == "hadamard":
                return hadamard_logical(arch, call.targets[0])
            if call.gate == "cphase":
                k, l = sorted(call.targets)
                return cphase_logical(arch, k, l)
            if call.gate == "cnot":
                return cnot_logical(arch, call.targets[0], call.targets[1])
        else:
            if call.gate == "cphase":
                k, l = sorted(call.targets)
                return cphase_logical_exchange(arch, k, l, params)
            if call.gate == "swap":
                k = call.targets[0]
                return synth_swap(arch, arch.star(k), arch.isolator(k)[0], params)
            if call.gate == "local":
                return local_logical_gate_exchange(arch, call.targets[0], call.matrix)
    except ValueError as exc:
        raise ScenarioError(f"gate {call.gate!r}{list(call.targets)}: {exc}") from None
    raise ScenarioError(f"unknown gate {call.gate!r} for this architecture")


def compile_program(scenario: Scenario) -> PulseSchedule:
    sched = PulseSchedule((), label="program")
    for call in scenario.program:
        sched = sched + compile_call(scenario.arch, call, scenario.synthesis)
    return sched.relabel("program")


@dataclass(frozen=True, eq=False)
class SimulationResult:
    basis: tuple[str, ...]
    amplitudes: np.ndarray          # logical code-space amplitudes
    probabilities: np.ndarray
    leakage: float
    counts: dict[str, int] | None

    def to_document(self) -> dict:
        doc = {
            "basis": list(self.basis),
            "amplitudes": [[float(a.real), float(a.imag)] for a in self.amplitudes],
            "probabilities": {b: float(p)
                              for b, p in zip(self.basis, self.probabilities)},
            "leakage": float(self.leakage),
        }
        if self.counts is not None:
            doc["counts"] = self.counts
        return doc


def run_scenario(scenario: Scenario) -> SimulationResult:
    """Encode, execute the compiled program, report the logical state.

    Sampled counts, when shots > 0, are drawn from the logical
    distribution (renormalized if any amplitude leaked out of the code
    space) with the scenario seed; they are bit-reproducible.
    """
    arch = scenario.arch
    reg = encode(scenario.initial_bits, arch)
    sched = compile_program(scenario)
    final = execute(sched, arch, reg.state, rng_seed=scenario.seed)
    amps = code_isometry(arch).conj().T @ final.amplitudes
    probs = np.abs(amps) ** 2
    leak = code_leakage(final, code_for(arch), arch)
    width = arch.n_logical
    basis = tuple(format(i, f"0{width}b") for i in range(1 << width))
    counts = None
    if scenario.shots > 0:
        rng = np.random.default_rng(scenario.seed)
        drawn = rng.multinomial(scenario.shots, probs / probs.sum())
        counts = {b: int(c) for b, c in zip(basis, drawn)}
    return SimulationResult(basis=basis, amplitudes=amps, probabilities=probs,
                            leakage=leak, counts=counts)
