"""Logical gates for the diagonal (Ising) chain.

Every construction here is exact: the chain Hamiltonian is diagonal, the
code's collective sigma^z vanishes on neighbor codewords, and intra-pair
terms contribute only global phases, so compiled gates reach machine
precision with no repetition parameter.

Gate recipes (z rotations are e^{-i(angle/2) sigma^z}):

* logical Rz: one z pulse on qubit a, which splits the codeword degeneracy.
* physical CPHASE on an (a, b) pair: Evolve(pi/(4 j0)) plus a -pi/2 z pulse
  on each qubit.
* logical Hadamard: CNOT(a,b) . H_a . CNOT(a,b), with CNOT(a,b) built by
  sandwiching the physical CPHASE between H_b pulses; 9 locals, 2 evolves,
  interaction time pi/(2 j0).
* logical CPHASE between neighbors: flip both b qubits (driving the pair
  out of the code space onto collective-spin eigenstates), Evolve for
  pi/(16 j1), one -pi/4 z pulse on each of the four qubits, flip back;
  8 locals, 1 evolve.
* logical CNOT: Hadamard-conjugated logical CPHASE.
"""
from __future__ import annotations

from .model import DiagonalChain
from .pirational import PiRational
from .schedule import Evolve, LocalRotation, LocalUnitary, PulseSchedule
from .statevector import HADAMARD_2, PAULI

Scalar = PiRational | float

_MINUS_HALF_PI = PiRational.ratio(-1, 2)
_MINUS_QUARTER_PI = PiRational.ratio(-1, 4)


def rz_logical(arch: DiagonalChain, k: int, angle: Scalar, on_b: bool = False) -> PulseSchedule:
    """Relative phase `angle` between the codewords of bit k.

    Acts on qubit a by default; acting on b instead negates the logical
    angle, so the pulse angle is flipped to keep the logical action.
    """
    if on_b:
        qubit, pulse = arch.qubit_b(k), -angle
    else:
        qubit, pulse = arch.qubit_a(k), angle
    return PulseSchedule((LocalRotation(qubit, "z", pulse),), label=f"rz[{k}]({angle})")


def cphase_physical(arch: DiagonalChain, a: int, b: int) -> PulseSchedule:
    """diag(1,1,1,-1) (up to global phase) on one intra-pair edge."""
    pairs = {(arch.qubit_a(k), arch.qubit_b(k)) for k in range(arch.n_logical)}
    if (a, b) not in pairs and (b, a) not in pairs:
        raise ValueError(f"({a}, {b}) is not an intra-pair edge of the chain")
    return PulseSchedule(
        (
            LocalRotation(b, "z", _MINUS_HALF_PI),
            LocalRotation(a, "z", _MINUS_HALF_PI),
            Evolve(PiRational.ratio(1, 4) / arch.j0),
        ),
        label=f"cphase_physical[{a},{b}]",
    )


def hadamard_logical(arch: DiagonalChain, k: int) -> PulseSchedule:
    """Hadamard on the code basis of bit k; neighbors must sit in the code
    space for correctness (not checkable at compile time)."""
    a, b = arch.qubit_a(k), arch.qubit_b(k)
    h_a = PulseSchedule((LocalUnitary(a, HADAMARD_2),))
    h_b = PulseSchedule((LocalUnitary(b, HADAMARD_2),))
    cnot_ab = h_b + cphase_physical(arch, a, b) + h_b
    return (cnot_ab + h_a + cnot_ab).relabel(f"hadamard_logical[{k}]")


def cphase_logical(arch: DiagonalChain, k: int, l: int) -> PulseSchedule:
    """diag(1,1,1,-1) on the code basis of adjacent bits (k, k+1)."""
    if l != k + 1:
        raise ValueError(f"encoded bits {k} and {l} are not an adjacent pair (k, k+1)")
    arch.qubit_a(l)  # range check
    j = arch.inter_coupling(k)
    flips = tuple(LocalUnitary(q, PAULI["x"]) for q in (arch.qubit_b(k), arch.qubit_b(l)))
    rotations = tuple(
        LocalRotation(q, "z", _MINUS_QUARTER_PI)
        for q in (arch.qubit_a(k), arch.qubit_b(k), arch.qubit_a(l), arch.qubit_b(l))
    )
    body = rotations + (Evolve(PiRational.ratio(1, 16) / j),)
    return PulseSchedule(flips + body + flips, label=f"cphase_logical[{k},{l}]")


def cnot_logical(arch: DiagonalChain, control: int, target: int) -> PulseSchedule:
    """CNOT on adjacent encoded bits via Hadamard-conjugated CPHASE."""
    if abs(control - target) != 1:
        raise ValueError(f"encoded bits {control} and {target} are not adjacent")
    h_t = hadamard_logical(arch, target)
    cp = cphase_logical(arch, min(control, target), max(control, target))
    return (h_t + cp + h_t).relabel(f"cnot_logical[{control}->{target}]")
