"""ifsim: exact simulator and pulse compiler for qubit chains whose
couplings are fixed at fabrication and never switched.

Logical bits live in interaction-free subspaces - code states the coupling
Hamiltonian annihilates - and gates are compiled to instantaneous local
pulses plus timed free evolution under the always-on chain Hamiltonian.
"""
from .model import DiagonalChain, ExchangeChain, build_hamiltonian, interaction_between
from .encoding import encode_diagonal, encode_exchange, logical_readout
from .exchange import SynthesisParams
from .pirational import PiRational
from .schedule import PulseSchedule, accounting, execute, schedule_unitary
from .statevector import PauliSum, PauliTerm, StateVector, evolve, measure_z

__version__ = "0.1.0"

__all__ = [
    "DiagonalChain",
    "ExchangeChain",
    "PauliSum",
    "PauliTerm",
    "PiRational",
    "PulseSchedule",
    "StateVector",
    "SynthesisParams",
    "accounting",
    "build_hamiltonian",
    "encode_diagonal",
    "encode_exchange",
    "evolve",
    "execute",
    "interaction_between",
    "logical_readout",
    "measure_z",
    "schedule_unitary",
    "__version__",
]
