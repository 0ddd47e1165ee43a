"""Quantum Fourier transform targets and the Hadamard-only non-universality witness."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hpsynth.gates import H, P
from hpsynth.linalg import frobenius_distance


def build_qft(m: int, normalized: bool = True) -> np.ndarray:
    """Entry (y, a) is ``exp(2 pi i a y / 2**m)``, times ``2**(-m/2)`` if normalized."""
    if m < 1:
        raise ValueError("m must be positive")
    dim = 1 << m
    roots = np.exp(2j * np.pi * np.arange(dim) / dim)
    # quarter turns exactly, so that m = 1 gives H bit for bit
    for quarter, z in enumerate((1, 1j, -1, -1j)):
        if quarter * dim % 4 == 0:
            roots[quarter * dim // 4] = z
    f = roots[np.outer(np.arange(dim), np.arange(dim)) % dim]
    if normalized:
        f /= math.sqrt(dim)
    return f


def qft_factored_state(a: int, m: int) -> list[np.ndarray]:
    """The m single-qubit factors of the QFT of |a>, most significant first.

    Factor k (1-based) is ``(|0> + exp(2 pi i 0.a_{m-k+1}...a_m) |1>) / sqrt 2``,
    where the binary fraction is formed from the k low-order bits of a.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= a < 1 << m:
        raise ValueError(f"a must lie in 0..{(1 << m) - 1}")
    out = []
    for k in range(1, m + 1):
        frac = (a % (1 << k)) / (1 << k)
        out.append(np.array([1.0, np.exp(2j * np.pi * frac)]) / math.sqrt(2.0))
    return out


def kron_all(factors) -> np.ndarray:
    out = np.ones(1, dtype=np.complex128)
    for f in factors:
        out = np.kron(out, f)
    return out


@dataclass(frozen=True)
class WitnessReport:
    closure_size: int
    dist_to_phase_half_pi: float
    dist_to_phase_pi: float
    h_eigenvalues: tuple[float, ...]

    @property
    def holds(self) -> bool:
        return self.closure_size == 2 and self.dist_to_phase_half_pi > 0.5

    def lines(self) -> list[str]:
        return [
            f"closure_size={self.closure_size}",
            f"min_distance_P(pi/2)={self.dist_to_phase_half_pi:.17g}",
            f"min_distance_P(pi)={self.dist_to_phase_pi:.17g}",
            "h_eigenvalues=" + ",".join(f"{e:.17g}" for e in self.h_eigenvalues),
            f"witness={'holds' if self.holds else 'fails'}",
        ]


def matrix_closure(generators, tol: float = 1e-10, limit: int = 10_000) -> list[np.ndarray]:
    """Multiplicative closure of a finite set, matrices equal within ``tol``."""
    elems = [np.asarray(g, dtype=np.complex128) for g in generators]
    frontier = list(elems)
    while frontier:
        fresh = []
        for a in frontier:
            for g in generators:
                prod = a @ np.asarray(g)
                if all(frobenius_distance(prod, e) > tol for e in elems):
                    elems.append(prod)
                    fresh.append(prod)
        if len(elems) > limit:
            raise RuntimeError("closure exceeds the element limit")
        frontier = fresh
    return elems


def hadamard_group_witness() -> WitnessReport:
    """H alone generates only {I, H}, which misses P(pi/2)."""
    h = H.matrix()
    closure = matrix_closure([h])
    half = P(math.pi / 2).matrix()
    full = P(math.pi).matrix()
    return WitnessReport(
        closure_size=len(closure),
        dist_to_phase_half_pi=min(frobenius_distance(half, e) for e in closure),
        dist_to_phase_pi=min(frobenius_distance(full, e) for e in closure),
        h_eigenvalues=tuple(sorted(np.linalg.eigvalsh(h).tolist())),
    )
