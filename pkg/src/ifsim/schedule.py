"""Pulse-schedule intermediate representation.

A schedule is an ordered list of instructions:

* LocalRotation(qubit, axis, angle) - instantaneous e^{-i(angle/2) sigma}
* LocalUnitary(qubit, matrix)       - instantaneous arbitrary 2x2 unitary
* Evolve(duration)                  - free evolution under the full chain
                                      Hamiltonian (couplings cannot be
                                      switched, so there is no pair-only
                                      evolution mode)
* MeasureZ(qubit)                   - projective z measurement

Local gates cost zero time; cost accounting counts local gates and the
total Evolve duration.  Angles and durations are either floats or exact
PiRational values; the JSON document format round-trips both bit-for-bit.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .model import Architecture, build_hamiltonian
from .pirational import PiRational, parse_scalar, scalar_to_doc
from .statevector import (
    AXES,
    PAULI,
    StateVector,
    _apply_single,
    _check_unitary,
    _guard_dim,
    apply_local_to_matrix,
    is_diagonal,
    matrix_of,
    measure_z,
)

Scalar = PiRational | float


def rotation_matrix(axis: str, angle: Scalar) -> np.ndarray:
    """e^{-i(angle/2) sigma_axis}."""
    if axis not in AXES:
        raise ValueError(f"unknown rotation axis {axis!r}")
    half = float(angle) / 2.0
    return math.cos(half) * np.eye(2) - 1j * math.sin(half) * PAULI[axis]


@dataclass(frozen=True)
class LocalRotation:
    qubit: int
    axis: str
    angle: Scalar

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"unknown rotation axis {self.axis!r}")

    def matrix(self) -> np.ndarray:
        return rotation_matrix(self.axis, self.angle)


@dataclass(frozen=True, eq=False)
class LocalUnitary:
    qubit: int
    matrix: np.ndarray

    def __post_init__(self):
        m = _check_unitary(self.matrix)
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def __eq__(self, other):
        if not isinstance(other, LocalUnitary):
            return NotImplemented
        return self.qubit == other.qubit and np.array_equal(self.matrix, other.matrix)


@dataclass(frozen=True)
class Evolve:
    duration: Scalar

    def __post_init__(self):
        if float(self.duration) < 0:
            raise ValueError(f"negative Evolve duration: {self.duration}")


@dataclass(frozen=True)
class MeasureZ:
    qubit: int


Instruction = LocalRotation | LocalUnitary | Evolve | MeasureZ


@dataclass(frozen=True)
class PulseSchedule:
    instructions: tuple[Instruction, ...] = ()
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "instructions", tuple(self.instructions))

    def __len__(self):
        return len(self.instructions)

    def __add__(self, other: "PulseSchedule") -> "PulseSchedule":
        label = "+".join(x for x in (self.label, other.label) if x)
        return PulseSchedule(self.instructions + other.instructions, label)

    def relabel(self, label: str) -> "PulseSchedule":
        return PulseSchedule(self.instructions, label)


@dataclass(frozen=True)
class CostReport:
    """Local-gate and interaction-time cost of a schedule.

    total_evolve_time is exact (a PiRational) whenever every Evolve carries
    an exact duration; otherwise it falls back to compensated float
    summation.
    """

    local_gate_count: int
    evolve_count: int
    total_evolve_time: Scalar

    def time_as_float(self) -> float:
        return float(self.total_evolve_time)


def accounting(sched: PulseSchedule) -> CostReport:
    locals_ = sum(1 for i in sched.instructions if isinstance(i, (LocalRotation, LocalUnitary)))
    evolves = [i for i in sched.instructions if isinstance(i, Evolve)]
    if all(isinstance(e.duration, PiRational) for e in evolves):
        total: Scalar = PiRational(sum((e.duration.multiple for e in evolves), Fraction(0)))
    else:
        total = math.fsum(float(e.duration) for e in evolves)
    return CostReport(locals_, len(evolves), total)


class _Evolver:
    """Shared eigendecomposition of one chain Hamiltonian."""

    def __init__(self, arch: Architecture):
        h = build_hamiltonian(arch)
        _guard_dim(h.n_qubits)
        m = matrix_of(h)
        self.n_qubits = h.n_qubits
        if is_diagonal(h):
            self._diag = m.diagonal().real
            self._eig = None
        else:
            self._diag = None
            self._eig = np.linalg.eigh(m)
        self._unitaries: dict[float, np.ndarray] = {}

    def apply(self, amps: np.ndarray, t: float) -> np.ndarray:
        if self._diag is not None:
            return np.exp(-1j * self._diag * t) * amps
        w, v = self._eig
        return v @ (np.exp(-1j * w * t) * (v.conj().T @ amps))

    def unitary(self, t: float) -> np.ndarray:
        u = self._unitaries.get(t)
        if u is None:
            if self._diag is not None:
                u = np.diag(np.exp(-1j * self._diag * t))
            else:
                w, v = self._eig
                u = (v * np.exp(-1j * w * t)) @ v.conj().T
            self._unitaries[t] = u
        return u


def _check_indices(sched: PulseSchedule, n_qubits: int):
    for pos, ins in enumerate(sched.instructions):
        q = getattr(ins, "qubit", None)
        if q is not None and not 0 <= q < n_qubits:
            raise ValueError(
                f"instruction {pos}: qubit {q} out of range for {n_qubits} qubits"
            )


def execute(sched: PulseSchedule, arch: Architecture, initial: StateVector,
            rng_seed=None) -> StateVector:
    """Fold the schedule over an initial state, left to right.

    Evolve uses the architecture's full chain Hamiltonian; measurements
    collapse with Born probabilities drawn from rng_seed.
    """
    if initial.n_qubits != arch.n_physical:
        raise ValueError(
            f"state has {initial.n_qubits} qubits, architecture has {arch.n_physical}"
        )
    _check_indices(sched, arch.n_physical)
    rng = np.random.default_rng(rng_seed)
    evolver = None
    amps = initial.amplitudes
    n = initial.n_qubits
    for ins in sched.instructions:
        if isinstance(ins, LocalRotation):
            amps = _apply_single(amps, n, ins.qubit, ins.matrix())
        elif isinstance(ins, LocalUnitary):
            amps = _apply_single(amps, n, ins.qubit, ins.matrix)
        elif isinstance(ins, Evolve):
            if evolver is None:
                evolver = _Evolver(arch)
            amps = evolver.apply(amps, float(ins.duration))
        else:  # MeasureZ
            _, post = measure_z(StateVector(n, amps), ins.qubit, rng)
            amps = post.amplitudes
    return StateVector(n, amps)


def schedule_unitary(sched: PulseSchedule, arch: Architecture) -> np.ndarray:
    """The ordered product of all instruction unitaries."""
    if any(isinstance(i, MeasureZ) for i in sched.instructions):
        raise ValueError("schedule contains measurements and has no unitary")
    n = arch.n_physical
    _guard_dim(n)
    _check_indices(sched, n)
    evolver = None
    u = np.eye(1 << n, dtype=complex)
    for ins in sched.instructions:
        if isinstance(ins, LocalRotation):
            u = apply_local_to_matrix(u, n, ins.qubit, ins.matrix())
        elif isinstance(ins, LocalUnitary):
            u = apply_local_to_matrix(u, n, ins.qubit, ins.matrix)
        else:
            if evolver is None:
                evolver = _Evolver(arch)
            u = evolver.unitary(float(ins.duration)) @ u
    return u


# ---------------------------------------------------------------------------
# document format

class ScheduleFormatError(ValueError):
    """Malformed schedule document; the message names the offending field."""


def _complex_to_doc(z: complex) -> list[str]:
    return [float(z.real).hex(), float(z.imag).hex()]


def _matrix_to_doc(m: np.ndarray) -> list[list[list[str]]]:
    return [[_complex_to_doc(m[r, c]) for c in range(2)] for r in range(2)]


def serialize(sched: PulseSchedule) -> dict:
    """Schedule -> plain-JSON document; numeric fields are exact strings."""
    out = []
    for ins in sched.instructions:
        if isinstance(ins, LocalRotation):
            out.append({"kind": "local_rotation", "qubit": ins.qubit,
                        "axis": ins.axis, "angle": scalar_to_doc(ins.angle)})
        elif isinstance(ins, LocalUnitary):
            out.append({"kind": "local_unitary", "qubit": ins.qubit,
                        "matrix": _matrix_to_doc(ins.matrix)})
        elif isinstance(ins, Evolve):
            out.append({"kind": "evolve", "duration": scalar_to_doc(ins.duration)})
        else:
            out.append({"kind": "measure_z", "qubit": ins.qubit})
    return {"label": sched.label, "instructions": out}


def _doc_scalar(entry: dict, key: str, where: str) -> Scalar:
    if key not in entry:
        raise ScheduleFormatError(f"{where}: missing field {key!r}")
    try:
        return parse_scalar(entry[key])
    except ValueError as exc:
        raise ScheduleFormatError(f"{where}: bad {key}: {exc}") from None


def _doc_qubit(entry: dict, where: str) -> int:
    q = entry.get("qubit")
    if not isinstance(q, int) or isinstance(q, bool) or q < 0:
        raise ScheduleFormatError(f"{where}: qubit must be a nonnegative integer, got {q!r}")
    return q


def _doc_complex(v, where: str) -> complex:
    if not (isinstance(v, list) and len(v) == 2):
        raise ScheduleFormatError(f"{where}: complex entries are [re, im] pairs, got {v!r}")
    parts = []
    for p in v:
        try:
            x = parse_scalar(p)
        except ValueError as exc:
            raise ScheduleFormatError(f"{where}: {exc}") from None
        if isinstance(x, PiRational):
            raise ScheduleFormatError(f"{where}: matrix entries must be plain floats, got {p!r}")
        parts.append(x)
    return complex(parts[0], parts[1])


def _doc_matrix(entry: dict, where: str) -> np.ndarray:
    raw = entry.get("matrix")
    if not (isinstance(raw, list) and len(raw) == 2
            and all(isinstance(r, list) and len(r) == 2 for r in raw)):
        raise ScheduleFormatError(f"{where}: matrix must be a 2x2 nested list")
    m = np.empty((2, 2), dtype=complex)
    for r in range(2):
        for c in range(2):
            m[r, c] = _doc_complex(raw[r][c], f"{where}: matrix[{r}][{c}]")
    return m


def deserialize(document) -> PulseSchedule:
    """Document (dict or JSON text) -> PulseSchedule, with positional errors."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ScheduleFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise ScheduleFormatError(f"schedule document must be an object, got {type(document).__name__}")
    label = document.get("label", "")
    if not isinstance(label, str):
        raise ScheduleFormatError(f"label must be a string, got {label!r}")
    raw = document.get("instructions")
    if not isinstance(raw, list):
        raise ScheduleFormatError("missing or non-list 'instructions' field")
    instructions: list[Instruction] = []
    for pos, entry in enumerate(raw):
        where = f"instruction {pos}"
        if not isinstance(entry, dict):
            raise ScheduleFormatError(f"{where}: expected an object, got {entry!r}")
        kind = entry.get("kind")
        if kind == "local_rotation":
            axis = entry.get("axis")
            if axis not in AXES:
                raise ScheduleFormatError(f"{where}: unknown axis {axis!r}")
            instructions.append(LocalRotation(_doc_qubit(entry, where), axis,
                                              _doc_scalar(entry, "angle", where)))
        elif kind == "local_unitary":
            try:
                instructions.append(LocalUnitary(_doc_qubit(entry, where),
                                                 _doc_matrix(entry, where)))
            except ValueError as exc:
                if isinstance(exc, ScheduleFormatError):
                    raise
                raise ScheduleFormatError(f"{where}: {exc}") from None
        elif kind == "evolve":
            duration = _doc_scalar(entry, "duration", where)
            if float(duration) < 0:
                raise ScheduleFormatError(f"{where}: negative duration {duration}")
            instructions.append(Evolve(duration))
        elif kind == "measure_z":
            instructions.append(MeasureZ(_doc_qubit(entry, where)))
        else:
            raise ScheduleFormatError(f"{where}: unknown instruction kind {kind!r}")
    return PulseSchedule(tuple(instructions), label)
