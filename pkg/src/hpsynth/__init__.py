"""Exact synthesis of n-qubit unitaries over controlled Hadamard, phase and NOT gates."""

from hpsynth.compiler import CompilationError, CompilationResult, compile_two_level, compile_unitary
from hpsynth.gates import Circuit, Gate, GateKind, H, P, X, apply_circuit, circuit_unitary, gate_matrix, gate_stats
from hpsynth.kernels import BACKEND
from hpsynth.linalg import (
    NotUnitaryError,
    UnitaryMatrix,
    adjoint,
    embed_two_level,
    frobenius_distance,
    haar_random_unitary,
    mat_mul,
    unitarity_defect,
)
from hpsynth.qft import build_qft, hadamard_group_witness, qft_factored_state
from hpsynth.two_level import assemble_two_level, decompose_plane_rotations, reconstruct_two_level
from hpsynth.u2 import synthesize_u2

__version__ = "0.1.0"
