"""Dense state-vector simulation over a handful of qubits.

Qubit 0 is the least-significant bit of the basis index.  Everything here
is a pure function: states are immutable and operations return new values.
Hamiltonians are weighted sums of Pauli products; time evolution uses the
exact eigendecomposition of the materialized matrix, so the only errors in
anything built on top are the ones a construction itself introduces.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

MAX_QUBITS = 12  # dense desk-scale guard, dim <= 4096

AXES = ("x", "y", "z")

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
IDENTITY_2 = np.eye(2, dtype=complex)
HADAMARD_2 = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def unitarity_residual(u: np.ndarray) -> float:
    """max |u^dag u - I|, the deviation from unitarity."""
    u = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def _check_unitary(u: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    res = unitarity_residual(u)
    if res > tol:
        raise ValueError(f"matrix is not unitary: max |u^dag u - I| = {res:.3e}")
    return u


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized complex amplitudes over 2**n_qubits basis states."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        if amps.shape != (1 << self.n_qubits,):
            raise ValueError(
                f"amplitude vector has length {amps.size}, expected {1 << self.n_qubits}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-9:
            raise ValueError(f"state vector is not normalized: |psi| = {norm!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, n_qubits: int, index: int = 0) -> "StateVector":
        amps = np.zeros(1 << n_qubits, dtype=complex)
        amps[index] = 1.0
        return cls(n_qubits, amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probability(self, index: int) -> float:
        return float(abs(self.amplitudes[index]) ** 2)


def overlap(a: StateVector, b: StateVector) -> complex:
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def state_fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|, insensitive to global phase."""
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)))


@dataclass(frozen=True)
class PauliTerm:
    """coefficient * product of single-qubit Pauli factors (distinct qubits)."""

    coefficient: float
    factors: tuple[tuple[int, str], ...]

    def __post_init__(self):
        if isinstance(self.coefficient, complex):
            raise TypeError("coefficient must be real (Hermitian terms only)")
        factors = tuple(sorted((int(q), ax) for q, ax in self.factors))
        qubits = [q for q, _ in factors]
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"repeated qubit index in Pauli term: {factors}")
        if any(q < 0 for q in qubits):
            raise ValueError(f"negative qubit index in Pauli term: {factors}")
        for _, ax in factors:
            if ax not in AXES:
                raise ValueError(f"unknown Pauli axis {ax!r}")
        object.__setattr__(self, "coefficient", float(self.coefficient))
        object.__setattr__(self, "factors", factors)


@dataclass(frozen=True)
class PauliSum:
    """Hermitian operator: a list of real-weighted Pauli products."""

    n_qubits: int
    terms: tuple[PauliTerm, ...]

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("need at least one qubit")
        terms = tuple(self.terms)
        for term in terms:
            for q, _ in term.factors:
                if q >= self.n_qubits:
                    raise ValueError(
                        f"term acts on qubit {q} but the sum has {self.n_qubits} qubits"
                    )
        object.__setattr__(self, "terms", terms)

    def __add__(self, other: "PauliSum") -> "PauliSum":
        if other.n_qubits != self.n_qubits:
            raise ValueError("cannot add Pauli sums of different widths")
        return PauliSum(self.n_qubits, self.terms + other.terms)


def _term_action(term: PauliTerm, n_qubits: int) -> tuple[np.ndarray, np.ndarray]:
    """Rows and values of the term's matrix, column-indexed by arange(dim)."""
    dim = 1 << n_qubits
    cols = np.arange(dim)
    vals = np.full(dim, term.coefficient, dtype=complex)
    flip = 0
    for q, ax in term.factors:
        if ax == "x":
            flip |= 1 << q
            continue
        sign = 1.0 - 2.0 * ((cols >> q) & 1)
        if ax == "z":
            vals = vals * sign
        else:  # y
            flip |= 1 << q
            vals = vals * (1j * sign)
    return cols ^ flip, vals


def _guard_dim(n_qubits: int):
    if n_qubits > MAX_QUBITS:
        raise ValueError(
            f"dense operations support at most {MAX_QUBITS} qubits, got {n_qubits}"
        )


def matrix_of(h: PauliSum) -> np.ndarray:
    """Materialize the Hermitian matrix of a Pauli sum."""
    _guard_dim(h.n_qubits)
    dim = 1 << h.n_qubits
    m = np.zeros((dim, dim), dtype=complex)
    cols = np.arange(dim)
    for term in h.terms:
        rows, vals = _term_action(term, h.n_qubits)
        m[rows, cols] += vals
    return m


def apply_pauli_sum(h: PauliSum, amplitudes: np.ndarray) -> np.ndarray:
    """H @ psi without materializing H."""
    amplitudes = np.asarray(amplitudes, dtype=complex)
    out = np.zeros_like(amplitudes)
    for term in h.terms:
        rows, vals = _term_action(term, h.n_qubits)
        out[rows] += vals * amplitudes  # rows is a permutation, so this is safe
    return out


def is_diagonal(h: PauliSum) -> bool:
    return all(ax == "z" for term in h.terms for _, ax in term.factors)


def apply_local_gate(state: StateVector, qubit: int, u: np.ndarray) -> StateVector:
    """(I x ... x u x ... x I) |psi> with u on the given qubit."""
    if not 0 <= qubit < state.n_qubits:
        raise ValueError(f"qubit {qubit} out of range for {state.n_qubits} qubits")
    u = _check_unitary(u)
    out = _apply_single(state.amplitudes, state.n_qubits, qubit, u)
    return StateVector(state.n_qubits, out)


def _apply_single(amps: np.ndarray, n: int, qubit: int, u: np.ndarray) -> np.ndarray:
    t = amps.reshape([2] * n)
    axis = n - 1 - qubit  # reshape puts the most significant bit first
    t = np.moveaxis(np.tensordot(u, np.moveaxis(t, axis, 0), axes=([1], [0])), 0, axis)
    return t.reshape(-1)


def apply_local_to_matrix(mat: np.ndarray, n: int, qubit: int, u: np.ndarray) -> np.ndarray:
    """Left-multiply a dim x dim matrix by a single-qubit gate."""
    dim = mat.shape[0]
    t = mat.reshape([2] * n + [dim])
    axis = n - 1 - qubit
    t = np.moveaxis(np.tensordot(u, np.moveaxis(t, axis, 0), axes=([1], [0])), 0, axis)
    return t.reshape(dim, dim)


def embed_local(n_qubits: int, qubit: int, u: np.ndarray) -> np.ndarray:
    """Dense I x ... x u x ... x I on the full space."""
    _guard_dim(n_qubits)
    mats = [np.asarray(u, dtype=complex) if q == qubit else IDENTITY_2
            for q in reversed(range(n_qubits))]
    return reduce(np.kron, mats)


def evolve(state: StateVector, h: PauliSum, duration) -> StateVector:
    """e^{-i H t} |psi> by exact eigendecomposition of H."""
    t = float(duration)
    if t < 0:
        raise ValueError(f"negative evolution duration: {t}")
    if h.n_qubits != state.n_qubits:
        raise ValueError("Hamiltonian and state have different widths")
    _guard_dim(h.n_qubits)
    if is_diagonal(h):
        diag = matrix_of(h).diagonal().real
        out = np.exp(-1j * diag * t) * state.amplitudes
    else:
        w, v = np.linalg.eigh(matrix_of(h))
        out = v @ (np.exp(-1j * w * t) * (v.conj().T @ state.amplitudes))
    return StateVector(state.n_qubits, out)


def unitary_of_evolution(h: PauliSum, duration) -> np.ndarray:
    """The full propagator e^{-i H t}."""
    t = float(duration)
    if t < 0:
        raise ValueError(f"negative evolution duration: {t}")
    _guard_dim(h.n_qubits)
    if is_diagonal(h):
        return np.diag(np.exp(-1j * matrix_of(h).diagonal().real * t))
    w, v = np.linalg.eigh(matrix_of(h))
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def measure_z(state: StateVector, qubit: int, rng_seed=None) -> tuple[int, StateVector]:
    """Sample a z-basis measurement; returns (outcome bit, collapsed state).

    rng_seed may be an int seed or a numpy Generator; a fixed seed gives a
    deterministic outcome.
    """
    if not 0 <= qubit < state.n_qubits:
        raise ValueError(f"qubit {qubit} out of range for {state.n_qubits} qubits")
    rng = np.random.default_rng(rng_seed)
    amps = state.amplitudes
    bit_set = ((np.arange(state.dim) >> qubit) & 1).astype(bool)
    p1 = float(np.sum(np.abs(amps[bit_set]) ** 2))
    outcome = 1 if rng.random() < p1 else 0
    keep = bit_set if outcome else ~bit_set
    post = np.where(keep, amps, 0.0)
    post = post / math.sqrt(p1 if outcome else 1.0 - p1)
    return outcome, StateVector(state.n_qubits, post)


def reduced_density(state: StateVector, keep: Iterable[int]) -> np.ndarray:
    """Reduced density matrix over the kept qubits.

    Kept qubits are reindexed in ascending order; the smallest original
    index becomes bit 0 of the reduced basis.
    """
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise ValueError("keep set must not be empty")
    if kept[0] < 0 or kept[-1] >= state.n_qubits:
        raise ValueError(f"keep set {kept} out of range for {state.n_qubits} qubits")
    n = state.n_qubits
    axes_kept = [n - 1 - q for q in reversed(kept)]  # descending qubit = leading axis
    axes_rest = [ax for ax in range(n) if ax not in axes_kept]
    t = state.amplitudes.reshape([2] * n).transpose(axes_kept + axes_rest)
    a = t.reshape(1 << len(kept), -1)
    return a @ a.conj().T
