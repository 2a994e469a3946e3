"""Chain architectures with fixed, always-on couplings.

Two one-dimensional layouts:

* DiagonalChain - Ising (sigma^z sigma^z) couplings.  Each encoded bit is a
  pair of physical qubits (a, b) coupled with strength j0; all four
  qubit pairs between neighboring encoded bits share strength j1.
* ExchangeChain - XY/anisotropic exchange couplings.  Each encoded bit is a
  "star" (information carrier) plus a two-dot "isolator" held in the
  singlet; stars couple to both dots of the adjacent isolators.  The last
  bit carries a trailing isolator so every adjacent pair of stars has an
  isolator between them.

The computation Hamiltonian contains star-dot edges only; dot-dot couplings
exist solely during initialization and never appear here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .statevector import PauliSum, PauliTerm


@dataclass(frozen=True)
class DiagonalChain:
    n_logical: int
    j0: float
    j1: float
    # optional per-gap override of the inter-bit coupling, for robustness
    # experiments; gap k sits between encoded bits k and k+1
    j1_overrides: tuple[tuple[int, float], ...] = ()

    def __post_init__(self):
        if self.n_logical < 1:
            raise ValueError("n_logical must be >= 1")
        if not (self.j0 > 0 and self.j1 > 0):
            raise ValueError("couplings j0 and j1 must be positive")
        for gap, j in self.j1_overrides:
            if not 0 <= gap < self.n_logical - 1:
                raise ValueError(f"override gap {gap} out of range")
            if not j > 0:
                raise ValueError(f"override coupling must be positive, got {j}")

    @property
    def n_physical(self) -> int:
        return 2 * self.n_logical

    def qubit_a(self, k: int) -> int:
        self._check_bit(k)
        return 2 * k

    def qubit_b(self, k: int) -> int:
        self._check_bit(k)
        return 2 * k + 1

    def inter_coupling(self, gap: int) -> float:
        if not 0 <= gap < self.n_logical - 1:
            raise ValueError(f"gap {gap} out of range for {self.n_logical} bits")
        return dict(self.j1_overrides).get(gap, self.j1)

    def _check_bit(self, k: int):
        if not 0 <= k < self.n_logical:
            raise ValueError(f"logical bit {k} out of range for {self.n_logical} bits")


@dataclass(frozen=True)
class ExchangeChain:
    n_logical: int
    jxy: float
    jz: float = 0.0

    def __post_init__(self):
        if self.n_logical < 1:
            raise ValueError("n_logical must be >= 1")
        if not self.jxy > 0:
            raise ValueError("jxy must be positive")
        if self.jz < 0:
            raise ValueError("jz must be >= 0")

    @property
    def n_physical(self) -> int:
        return 3 * self.n_logical

    def star(self, k: int) -> int:
        self._check_bit(k)
        return 3 * k

    def isolator(self, k: int) -> tuple[int, int]:
        """Dots of isolator k, which sits to the right of star k."""
        self._check_bit(k)
        return 3 * k + 1, 3 * k + 2

    def star_dot_edges(self) -> tuple[tuple[int, int], ...]:
        edges = []
        for k in range(self.n_logical):
            i1, i2 = self.isolator(k)
            edges += [(self.star(k), i1), (self.star(k), i2)]
            if k + 1 < self.n_logical:
                edges += [(self.star(k + 1), i1), (self.star(k + 1), i2)]
        return tuple(edges)

    def _check_bit(self, k: int):
        if not 0 <= k < self.n_logical:
            raise ValueError(f"logical bit {k} out of range for {self.n_logical} bits")


Architecture = DiagonalChain | ExchangeChain


def _exchange_edge_terms(s: int, d: int, jxy: float, jz: float) -> list[PauliTerm]:
    terms = [
        PauliTerm(jxy, ((s, "x"), (d, "x"))),
        PauliTerm(jxy, ((s, "y"), (d, "y"))),
    ]
    if jz != 0:
        terms.append(PauliTerm(jz, ((s, "z"), (d, "z"))))
    return terms


def build_hamiltonian(arch: Architecture) -> PauliSum:
    """The always-on computation Hamiltonian of the chain."""
    if isinstance(arch, DiagonalChain):
        terms = [
            PauliTerm(arch.j0, ((arch.qubit_a(k), "z"), (arch.qubit_b(k), "z")))
            for k in range(arch.n_logical)
        ]
        for gap in range(arch.n_logical - 1):
            terms += _diagonal_cross_terms(arch, gap)
        return PauliSum(arch.n_physical, tuple(terms))
    if isinstance(arch, ExchangeChain):
        terms = []
        for s, d in arch.star_dot_edges():
            terms += _exchange_edge_terms(s, d, arch.jxy, arch.jz)
        return PauliSum(arch.n_physical, tuple(terms))
    raise TypeError(f"unknown architecture type {type(arch).__name__}")


def _diagonal_cross_terms(arch: DiagonalChain, gap: int) -> list[PauliTerm]:
    j = arch.inter_coupling(gap)
    left = (arch.qubit_a(gap), arch.qubit_b(gap))
    right = (arch.qubit_a(gap + 1), arch.qubit_b(gap + 1))
    return [PauliTerm(j, ((u, "z"), (v, "z"))) for u in left for v in right]


def interaction_between(arch: Architecture, k: int, l: int) -> PauliSum:
    """Only the coupling terms that tie encoded bits k and k+1 together.

    Diagonal: the four j1 sigma^z sigma^z cross terms.  Exchange: the edges
    between star k+1 and isolator k (the isolator belongs to bit k).
    """
    if l != k + 1:
        raise ValueError(f"encoded bits {k} and {l} are not an adjacent pair (k, k+1)")
    if isinstance(arch, DiagonalChain):
        arch._check_bit(k)
        arch._check_bit(l)
        return PauliSum(arch.n_physical, tuple(_diagonal_cross_terms(arch, k)))
    if isinstance(arch, ExchangeChain):
        i1, i2 = arch.isolator(k)
        s = arch.star(l)
        terms = _exchange_edge_terms(s, i1, arch.jxy, arch.jz)
        terms += _exchange_edge_terms(s, i2, arch.jxy, arch.jz)
        return PauliSum(arch.n_physical, tuple(terms))
    raise TypeError(f"unknown architecture type {type(arch).__name__}")


def isolator_pair_hamiltonian(jxy: float, jz: float = 0.0) -> PauliSum:
    """Initialization coupling of one dot pair, on 2 qubits.

    Used to verify that the singlet is the unique ground state the dots
    relax to; it never enters the computation Hamiltonian.
    """
    if not jxy > 0:
        raise ValueError("jxy must be positive")
    return PauliSum(2, tuple(_exchange_edge_terms(0, 1, jxy, jz)))
