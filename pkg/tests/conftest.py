"""Shared test oracles, built independently of the package internals:
operators assembled with plain Kronecker products and a scaled-and-squared
Taylor exponential, so package results are checked against a second route.
"""
from __future__ import annotations

from functools import reduce

import numpy as np
import pytest

I2 = np.eye(2, dtype=complex)
X2 = np.array([[0, 1], [1, 0]], dtype=complex)
Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
H2 = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
PAULIS = {"x": X2, "y": Y2, "z": Z2}


def op_on(n: int, ops: dict[int, np.ndarray]) -> np.ndarray:
    """Tensor product with qubit 0 as the least-significant index bit."""
    return reduce(np.kron, [ops.get(q, I2) for q in reversed(range(n))])


def pauli_sum_matrix(n: int, terms) -> np.ndarray:
    """terms: iterable of (coefficient, {qubit: axis})."""
    out = np.zeros((2**n, 2**n), dtype=complex)
    for coeff, factors in terms:
        out += coeff * op_on(n, {q: PAULIS[ax] for q, ax in factors.items()})
    return out


def expm_taylor(m: np.ndarray, terms: int = 30) -> np.ndarray:
    """Truncated-series matrix exponential with scaling and squaring."""
    m = np.asarray(m, dtype=complex)
    norm = float(np.linalg.norm(m, 1))
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    t = m / (2.0 ** squarings)
    out = np.eye(m.shape[0], dtype=complex)
    term = np.eye(m.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ t / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def random_state(rng: np.random.Generator, n: int) -> np.ndarray:
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return v / np.linalg.norm(v)


def random_pauli_terms(rng: np.random.Generator, n: int, max_terms: int = 6):
    """(coefficient, {qubit: axis}) tuples for a random Hermitian sum."""
    out = []
    for _ in range(rng.integers(1, max_terms + 1)):
        support = rng.choice(n, size=rng.integers(1, min(n, 3) + 1), replace=False)
        factors = {int(q): "xyz"[rng.integers(3)] for q in support}
        out.append((float(rng.uniform(-1, 1)), factors))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
