"""Compile V in U(2**n) to a circuit over controlled H, P(theta) and X.

Each two-level factor acting on (|j>, |i>) is conjugated by a basis
permutation that carries i to 2**n - 1 and j to 2**n - 2. On those two
states the factor is a gate on the last qubit controlled by all the
others, so its 2x2 block is compiled to an H/P word and each gate of the
word gets the full control set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from hpsynth.gates import Circuit, Gate, GateStats, circuit_unitary, gate_stats
from hpsynth.linalg import UNITARY_TOL, NotUnitaryError, as_matrix, frobenius_distance, unitarity_defect
from hpsynth.perms import pair_placement_permutation, permutation_circuit
from hpsynth.two_level import TwoLevelFactor, assemble_two_level
from hpsynth.u2 import synthesize_u2

log = logging.getLogger(__name__)

IDENTITY_TOL = 1e-12


class CompilationError(RuntimeError):
    """The compiled circuit does not reproduce its input within tolerance."""

    def __init__(self, error: float, tol: float):
        super().__init__(f"reconstruction error {error:.3e} exceeds tolerance {tol:.1e}")
        self.error = error
        self.tol = tol


@dataclass(frozen=True)
class CompilationResult:
    circuit: Circuit
    reconstruction_error: float
    ledger: GateStats
    factor_count: int


def default_tolerance(n: int) -> float:
    return 1e-7 * 2**n


def num_qubits_for_dim(dim: int) -> int:
    n = dim.bit_length() - 1
    if n < 1 or 1 << n != dim:
        raise ValueError(f"dimension {dim} is not a power of two >= 2")
    return n


@lru_cache(maxsize=1024)
def _placement_circuit(i: int, j: int, n: int) -> Circuit:
    return permutation_circuit(pair_placement_permutation(i, j, 1 << n))


def compile_two_level(f: TwoLevelFactor, n: int) -> Circuit:
    """Circuit whose unitary is the embedding of ``f`` into U(2**n).

    Blocks within 1e-12 of the identity compile to the empty circuit.
    """
    dim = 1 << n
    if f.i >= dim:
        raise ValueError(f"factor index {f.i} out of range for {n} qubits")
    block = np.asarray(f.block)
    if np.linalg.norm(block - np.eye(2)) <= IDENTITY_TOL:
        return Circuit(n)
    controls = tuple(range(n - 1))
    core = Circuit(n, tuple(Gate(kind, n - 1, controls) for kind in synthesize_u2(block)))
    place = _placement_circuit(f.i, f.j, n)
    return Circuit.concat(n, (place, core, place.inverse()))


def compile_unitary(v, tol: float | None = None) -> CompilationResult:
    """Compile and self-verify. Raises :class:`CompilationError` above ``tol``.

    ``tol`` defaults to ``1e-7 * 2**n``.
    """
    m = as_matrix(v)
    n = num_qubits_for_dim(m.shape[0])
    d = unitarity_defect(m)
    if not d < UNITARY_TOL:
        raise NotUnitaryError(d)
    tol = default_tolerance(n) if tol is None else tol

    factors = assemble_two_level(m)
    # factors[0] is the leftmost matrix factor, so it must act on kets last
    circuit = Circuit.concat(n, (compile_two_level(f, n) for f in reversed(factors)))
    error = frobenius_distance(circuit_unitary(circuit), m)
    log.debug("compiled %d factors into %d gates, error %.3e", len(factors), len(circuit), error)
    if not error <= tol:
        raise CompilationError(error, tol)
    return CompilationResult(circuit, error, gate_stats(circuit), len(factors))

