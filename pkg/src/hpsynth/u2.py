"""Single-qubit synthesis over {H, P(theta)}.

Every A in U(2) factors as

    A = e^{i delta} diag(e^{i alpha/2}, e^{-i alpha/2}) R(omega) diag(e^{i beta/2}, e^{-i beta/2})

with ``R(omega) = [[cos, sin], [-sin, cos]]``. Diagonals come from
``X P(w1) X P(w2) = diag(e^{i w1}, e^{i w2})`` with ``X = H P(-pi) H``, and
rotations from ``R(w) = P(-pi/2) H P(w) X P(-w) H P(-pi/2)``. Words are
lists of :class:`~hpsynth.gates.GateKind` in application order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hpsynth.gates import H, GateKind, P
from hpsynth.linalg import UNITARY_TOL, NotUnitaryError, UnitaryMatrix, as_matrix, unitarity_defect

HPWord = list[GateKind]

DEGENERATE_EPS = 1e-12


@dataclass(frozen=True)
class EulerAngles:
    delta: float
    alpha: float
    omega: float
    beta: float


def rotation(omega: float) -> np.ndarray:
    c, s = math.cos(omega), math.sin(omega)
    return np.array([[c, s], [-s, c]], dtype=np.complex128)


def _half_phase(angle: float) -> np.ndarray:
    return np.diag([np.exp(0.5j * angle), np.exp(-0.5j * angle)])


def compose_euler(e: EulerAngles) -> UnitaryMatrix:
    m = np.exp(1j * e.delta) * (_half_phase(e.alpha) @ rotation(e.omega) @ _half_phase(e.beta))
    return UnitaryMatrix.certify(m)


def _check_u2(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape != (2, 2):
        raise ValueError("expected a 2x2 matrix")
    d = unitarity_defect(m)
    if not d < UNITARY_TOL:
        raise NotUnitaryError(d)
    return m


def euler_decompose(a) -> EulerAngles:
    """Angles with ``compose_euler(euler_decompose(A)) == A``.

    ``delta = arg(det A) / 2`` reduces A to SU(2), where A' = [[a, b], ...]
    has ``|a| = cos omega`` and ``|b| = sin omega``. The phases of a and b
    give the half-sum and half-difference of alpha and beta; a phase that is
    undetermined because its entry vanishes is set to zero.
    """
    m = _check_u2(a)
    delta = float(np.angle(np.linalg.det(m))) / 2.0
    su = np.exp(-1j * delta) * m
    a00, a01 = su[0, 0], su[0, 1]
    omega = math.atan2(abs(a01), abs(a00))
    half_sum = float(np.angle(a00)) if abs(a00) > DEGENERATE_EPS else 0.0
    half_diff = float(np.angle(a01)) if abs(a01) > DEGENERATE_EPS else 0.0
    return EulerAngles(delta, half_sum + half_diff, omega, half_sum - half_diff)


def x_word() -> HPWord:
    return [H, P(-math.pi), H]


def torus_word(omega1: float, omega2: float) -> HPWord:
    """8 gates evaluating to ``diag(e^{i omega1}, e^{i omega2})``."""
    return [*x_word(), P(omega1), *x_word(), P(omega2)]


def rotation_word(omega: float) -> HPWord:
    """9 gates evaluating to ``R(omega)``."""
    return [P(-math.pi / 2), H, P(-omega), *x_word(), P(omega), H, P(-math.pi / 2)]


def synthesize_u2(a) -> HPWord:
    """An H/P word of 25 gates evaluating exactly (global phase included) to A.

    The scalar phase is folded into the alpha diagonal, so the word is
    ``diag(beta) ; R(omega) ; diag(delta, alpha)`` in application order.
    """
    e = euler_decompose(a)
    return [
        *torus_word(e.beta / 2, -e.beta / 2),
        *rotation_word(e.omega),
        *torus_word(e.delta + e.alpha / 2, e.delta - e.alpha / 2),
    ]


def evaluate_hp_word(word: HPWord) -> UnitaryMatrix:
    m = np.eye(2, dtype=np.complex128)
    for kind in word:
        m = kind.matrix() @ m
    return UnitaryMatrix.certify(m)


def is_hp_word(word) -> bool:
    return all(isinstance(k, GateKind) and k.name in ("H", "P") for k in word)
