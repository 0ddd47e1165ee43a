"""Dense complex matrix helpers, unitarity certification and Haar sampling.

Matrices are plain ``complex128`` numpy arrays. :class:`UnitaryMatrix` wraps
one together with the unitarity defect measured when it was certified, and
freezes the underlying buffer so that certified values cannot drift.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

UNITARY_TOL = 1e-10


class NotUnitaryError(ValueError):
    """Raised when a matrix fails the unitarity gate."""

    def __init__(self, defect: float, tol: float = UNITARY_TOL):
        super().__init__(f"matrix is not unitary: defect {defect:.3e} > {tol:.1e}")
        self.defect = defect


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a square complex128 array, rejecting anything else."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


@dataclass(frozen=True, eq=False)
class UnitaryMatrix:
    """A certified unitary: ``defect = ||M^H M - I||_F <= 1e-10``.

    Construct through :meth:`certify`. The wrapped array is read-only; use
    ``np.array(u)`` for a writable copy.
    """

    data: np.ndarray
    defect: float

    @classmethod
    def certify(cls, a, tol: float = UNITARY_TOL) -> "UnitaryMatrix":
        if isinstance(a, UnitaryMatrix):
            return a
        m = as_matrix(a).copy()
        d = unitarity_defect(m)
        if not d <= tol:
            raise NotUnitaryError(d, tol)
        m.setflags(write=False)
        return cls(m, d)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.data if not copy else self.data.copy()
        return self.data.astype(dtype)

    def __getitem__(self, key):
        return self.data[key]

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self) -> str:
        return f"UnitaryMatrix(dim={self.dim}, defect={self.defect:.2e})"


def mat_mul(a, b):
    """Matrix product. Two certified unitaries yield a certified unitary."""
    A = as_matrix(a)
    B = as_matrix(b)
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    out = A @ B
    if isinstance(a, UnitaryMatrix) and isinstance(b, UnitaryMatrix):
        return UnitaryMatrix.certify(out)
    return out


def adjoint(a) -> np.ndarray:
    return as_matrix(a).conj().T


def unitarity_defect(a) -> float:
    m = as_matrix(a)
    return float(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0]), "fro"))


def frobenius_distance(a, b) -> float:
    A = as_matrix(a)
    B = as_matrix(b)
    if A.shape != B.shape:
        raise ValueError(f"dimension mismatch: {A.shape} vs {B.shape}")
    return float(np.linalg.norm(A - B, "fro"))


def haar_random_unitary(n: int, seed: int) -> UnitaryMatrix:
    """Sample U(n) from the Haar measure, reproducibly for a given seed.

    Uses the QR construction with the phases of ``diag(R)`` pushed into the
    columns of ``Q`` so that the triangular factor has a positive diagonal,
    which is what makes the distribution invariant.
    """
    if n < 1:
        raise ValueError("dimension must be positive")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return UnitaryMatrix.certify(q)


def embed_two_level(n: int, i: int, j: int, block) -> UnitaryMatrix:
    """Embed a 2x2 unitary acting on the ordered pair (|j>, |i>) into U(n)."""
    if i == j:
        raise ValueError("two-level indices must differ")
    if not (0 <= j < i < n):
        raise ValueError(f"need 0 <= j < i < {n}, got i={i}, j={j}")
    b = as_matrix(block)
    if b.shape != (2, 2):
        raise ValueError("block must be 2x2")
    m = np.eye(n, dtype=np.complex128)
    m[j, j], m[j, i] = b[0, 0], b[0, 1]
    m[i, j], m[i, i] = b[1, 0], b[1, 1]
    return UnitaryMatrix.certify(m)
