"""Plane-rotation triangularization of U(N) and two-level factorization.

``decompose_plane_rotations`` zeroes column N-1 from row N-2 up to row 0
with plane rotations ``T_{N-1,r}``, then column N-2, and so on, leaving a
diagonal of phases. The rotations come back in elimination order, so that

    V = T_0 T_1 ... T_{K-1} diag(d)

``assemble_two_level`` moves each single-state phase factor next to the last
rotation of its row group and merges the pair, giving N(N-1)/2 two-level
factors ``V_{ij}`` whose left-to-right product is V. All indices are 0-based.

Rotation convention: on the ordered pair (|q>, |p>) with q < p the block is
``[[cos phi, -e^{-i sigma} sin phi], [e^{i sigma} sin phi, cos phi]]``.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from hpsynth.linalg import (
    UNITARY_TOL,
    NotUnitaryError,
    UnitaryMatrix,
    as_matrix,
    embed_two_level,
    unitarity_defect,
)

ZERO_EPS = 1e-12


@dataclass(frozen=True)
class PlaneRotation:
    p: int
    q: int
    phi: float
    sigma: float

    def __post_init__(self):
        if not self.p > self.q >= 0:
            raise ValueError(f"plane rotation needs p > q >= 0, got p={self.p}, q={self.q}")

    def block(self) -> np.ndarray:
        c, s = math.cos(self.phi), math.sin(self.phi)
        return np.array(
            [[c, -np.exp(-1j * self.sigma) * s], [np.exp(1j * self.sigma) * s, c]],
            dtype=np.complex128,
        )


@dataclass(frozen=True)
class ZeroingCase:
    r_top: float
    theta_top: float
    r_diag: float
    theta_diag: float
    case_id: int


@dataclass(frozen=True)
class TwoLevelFactor:
    """Acts as ``block`` on (|j>, |i>) and as the identity elsewhere."""

    i: int
    j: int
    block: UnitaryMatrix

    def __post_init__(self):
        if not 0 <= self.j < self.i:
            raise ValueError(f"need 0 <= j < i, got i={self.i}, j={self.j}")
        object.__setattr__(self, "block", UnitaryMatrix.certify(self.block))


def plane_rotation_matrix(n: int, t: PlaneRotation) -> UnitaryMatrix:
    if t.p >= n:
        raise ValueError(f"rotation index {t.p} out of range for dimension {n}")
    return embed_two_level(n, t.p, t.q, t.block())


def select_zeroing(v_top: complex, v_diag: complex) -> tuple[ZeroingCase, float, float]:
    """Pick (phi, sigma) so that applying the adjoint rotation zeroes ``v_top``.

    The adjoint rotation maps the top entry to
    ``v_top cos phi + v_diag e^{-i sigma} sin phi``.
    """
    r_top, theta_top = abs(v_top), math.atan2(v_top.imag, v_top.real)
    r_diag, theta_diag = abs(v_diag), math.atan2(v_diag.imag, v_diag.real)
    if r_top < ZERO_EPS:
        case_id, phi, sigma = 1, 0.0, 0.0
    elif r_diag < ZERO_EPS:
        case_id, phi, sigma = 2, math.pi / 2, 0.0
    else:
        case_id = 3
        sigma = -theta_top + theta_diag
        phi = math.atan(-r_top / r_diag)
    return ZeroingCase(r_top, theta_top, r_diag, theta_diag, case_id), phi, sigma


def _check_unitary(v) -> np.ndarray:
    m = as_matrix(v)
    d = unitarity_defect(m)
    if not d < UNITARY_TOL:
        raise NotUnitaryError(d)
    return m


def _apply_adjoint_rotation(w: np.ndarray, t: PlaneRotation) -> None:
    c, s = math.cos(t.phi), math.sin(t.phi)
    e = np.exp(1j * t.sigma)
    row_q = w[t.q].copy()
    row_p = w[t.p]
    w[t.q] = c * row_q + np.conj(e) * s * row_p
    w[t.p] = -e * s * row_q + c * row_p


def elimination_stages(v) -> Iterator[tuple[int, list[PlaneRotation], np.ndarray]]:
    """Yield ``(column, rotations, working_matrix)`` after each column is cleared.

    The working matrix is a snapshot; entries ``[0:column, column]`` have been
    zeroed at that point.
    """
    w = _check_unitary(v).copy()
    n = w.shape[0]
    for col in range(n - 1, 0, -1):
        rots = []
        for row in range(col - 1, -1, -1):
            _, phi, sigma = select_zeroing(complex(w[row, col]), complex(w[col, col]))
            t = PlaneRotation(col, row, phi, sigma)
            _apply_adjoint_rotation(w, t)
            rots.append(t)
        yield col, rots, w.copy()


def decompose_plane_rotations(v) -> tuple[list[PlaneRotation], np.ndarray]:
    """Return ``(rotations, d)`` with ``V = T_0 T_1 ... T_{K-1} diag(d)``."""
    rotations: list[PlaneRotation] = []
    w = None
    for _, rots, w in elimination_stages(v):
        rotations.extend(rots)
    if w is None:  # 1x1 input
        w = as_matrix(v)
    d = np.diagonal(w).copy()
    d /= np.abs(d)
    return rotations, d


def factor_diagonal(d) -> list[UnitaryMatrix]:
    """Split ``diag(d)`` into N-1 factors: (d0, d1) on states 0, 1, then d_i alone."""
    d = np.asarray(d, dtype=np.complex128)
    n = d.shape[0]
    if n < 2:
        raise ValueError("need at least two phases")
    first = np.ones(n, dtype=np.complex128)
    first[:2] = d[:2]
    out = [UnitaryMatrix.certify(np.diag(first))]
    for i in range(2, n):
        di = np.ones(n, dtype=np.complex128)
        di[i] = d[i]
        out.append(UnitaryMatrix.certify(np.diag(di)))
    return out


def assemble_two_level(v) -> list[TwoLevelFactor]:
    """Two-level factors of V, leftmost matrix factor first.

    Row groups run i = N-1 down to 1, and within a group j = i-1 down to 0.
    The factor (i, 0) carries ``T_{i,0}`` times the phase factor for state i
    (for i = 1, the phases of states 0 and 1).
    """
    m = as_matrix(v)
    n = m.shape[0]
    if n < 2:
        raise ValueError("need dimension at least 2")
    rotations, d = decompose_plane_rotations(m)
    factors = []
    for t in rotations:
        block = t.block()
        if t.q == 0:
            phases = (d[0], d[1]) if t.p == 1 else (1.0, d[t.p])
            block = block @ np.diag(phases)
        factors.append(TwoLevelFactor(t.p, t.q, block))
    return factors


def reconstruct_two_level(factors: list[TwoLevelFactor], n: int) -> UnitaryMatrix:
    m = np.eye(n, dtype=np.complex128)
    for f in factors:
        if f.i >= n:
            raise ValueError(f"factor index {f.i} out of range for dimension {n}")
        b = np.asarray(f.block)
        # right-multiply by the embedding: only columns j and i change
        cj = m[:, f.j].copy()
        ci = m[:, f.i].copy()
        m[:, f.j] = cj * b[0, 0] + ci * b[1, 0]
        m[:, f.i] = cj * b[0, 1] + ci * b[1, 1]
    return UnitaryMatrix.certify(m)
