"""Code subspaces that the coupling Hamiltonian annihilates.

Diagonal chain: each encoded bit stores |0> as up-down and |1> as down-up
on its (a, b) pair.  The collective sigma^z of a pair vanishes on both
codewords, so every inter-bit coupling term kills encoded states, and both
codewords share the intra-pair energy -j0.

Exchange chain: the carrier star holds the bit; the isolator dots sit in
the singlet, which the collective operators of the dot pair annihilate.
Encoded registers therefore see no cross-bit action at all.

Spin convention: up = computational 0 on every physical qubit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import ClassVar, Sequence

import numpy as np

from .model import Architecture, DiagonalChain, ExchangeChain
from .schedule import LocalUnitary, PulseSchedule
from .statevector import (
    PAULI,
    PauliSum,
    StateVector,
    apply_pauli_sum,
    measure_z,
)


@dataclass(frozen=True)
class DiagonalCode:
    """|0> = |up_a down_b>, |1> = |down_a up_b> on a two-qubit block."""

    block_qubits: ClassVar[int] = 2

    def codeword(self, bit: int) -> np.ndarray:
        v = np.zeros(4, dtype=complex)
        v[0b10 if bit == 0 else 0b01] = 1.0  # index = a + 2b, up = 0
        return v


@dataclass(frozen=True)
class ExchangeCode:
    """|s> on the star times the singlet on the isolator dots."""

    block_qubits: ClassVar[int] = 3

    def codeword(self, bit: int) -> np.ndarray:
        v = np.zeros(8, dtype=complex)
        # index = q + 2*i1 + 4*i2; singlet = (|up down> - |down up>)/sqrt2
        v[bit | (0 << 1) | (1 << 2)] = 1.0 / math.sqrt(2)
        v[bit | (1 << 1) | (0 << 2)] = -1.0 / math.sqrt(2)
        return v


DIAGONAL_CODE = DiagonalCode()
EXCHANGE_CODE = ExchangeCode()

Code = DiagonalCode | ExchangeCode


def code_for(arch: Architecture) -> Code:
    return DIAGONAL_CODE if isinstance(arch, DiagonalChain) else EXCHANGE_CODE


def code_isometry(arch: Architecture, code: Code | None = None) -> np.ndarray:
    """Columns embed each logical basis state into the physical space.

    Logical bit k is bit k of the column index; blocks occupy contiguous
    ascending physical qubits, so the isometry is a reversed Kronecker
    product of per-block codeword matrices.
    """
    code = code or code_for(arch)
    block = np.stack([code.codeword(0), code.codeword(1)], axis=1)
    return reduce(np.kron, [block] * arch.n_logical)


@dataclass(frozen=True, eq=False)
class LogicalRegister:
    arch: Architecture
    state: StateVector

    def __post_init__(self):
        if self.state.n_qubits != self.arch.n_physical:
            raise ValueError(
                f"state has {self.state.n_qubits} qubits, architecture has "
                f"{self.arch.n_physical}"
            )

    @property
    def width(self) -> int:
        return self.arch.n_logical


def _encode(bits: Sequence[int], arch: Architecture, code: Code) -> LogicalRegister:
    bits = list(bits)
    if len(bits) != arch.n_logical:
        raise ValueError(f"got {len(bits)} bits for a {arch.n_logical}-bit register")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"bits must be 0 or 1, got {bits}")
    amps = reduce(np.kron, [code.codeword(b) for b in reversed(bits)])
    return LogicalRegister(arch, StateVector(arch.n_physical, amps))


def encode_diagonal(bits: Sequence[int], arch: DiagonalChain) -> LogicalRegister:
    if not isinstance(arch, DiagonalChain):
        raise TypeError("encode_diagonal needs a DiagonalChain")
    return _encode(bits, arch, DIAGONAL_CODE)


def encode_exchange(bits: Sequence[int], arch: ExchangeChain) -> LogicalRegister:
    if not isinstance(arch, ExchangeChain):
        raise TypeError("encode_exchange needs an ExchangeChain")
    return _encode(bits, arch, EXCHANGE_CODE)


def encode(bits: Sequence[int], arch: Architecture) -> LogicalRegister:
    return _encode(bits, arch, code_for(arch))


def annihilation_residual(h: PauliSum, state: StateVector) -> float:
    """||H |psi>||; zero certifies that the state sits in H's kernel."""
    if h.n_qubits != state.n_qubits:
        raise ValueError(
            f"operator on {h.n_qubits} qubits, state on {state.n_qubits}"
        )
    return float(np.linalg.norm(apply_pauli_sum(h, state.amplitudes)))


def leakage(state: StateVector, code: Code, arch: Architecture) -> float:
    """1 - ||P|psi>||^2 for P the product of per-bit code projectors."""
    e = code_isometry(arch, code)
    if e.shape[0] != state.dim:
        raise ValueError("state dimension does not match the architecture")
    return 1.0 - float(np.linalg.norm(e.conj().T @ state.amplitudes) ** 2)


def init_schedule_diagonal(arch: DiagonalChain) -> PulseSchedule:
    """From the field-aligned all-up state to the all-zeros encoded state.

    One X pulse on qubit b of every encoded bit; no interaction time.
    """
    flips = tuple(LocalUnitary(arch.qubit_b(k), PAULI["x"])
                  for k in range(arch.n_logical))
    return PulseSchedule(flips, label="init_diagonal")


def logical_readout(reg: LogicalRegister, k: int, rng_seed=None) -> tuple[int, LogicalRegister]:
    """Measure encoded bit k; returns (bit, post-measurement register).

    Diagonal: measures qubit a (up = 0 means the outcome is the bit).
    Exchange: measures the star directly.
    """
    arch = reg.arch
    qubit = arch.qubit_a(k) if isinstance(arch, DiagonalChain) else arch.star(k)
    outcome, post = measure_z(reg.state, qubit, rng_seed)
    return outcome, LogicalRegister(arch, post)
