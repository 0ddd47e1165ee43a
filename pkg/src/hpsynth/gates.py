"""Target gate set {H, P(theta), X} with positive controls, circuits, simulation.

Conventions:

* qubit 0 is the most significant bit of a basis index, so on ``n`` qubits
  qubit ``q`` has bit mask ``1 << (n - 1 - q)``;
* the gate list is in application order: the first gate acts on a ket
  first, so the circuit matrix is ``G_k ... G_2 G_1``.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from hpsynth import kernels
from hpsynth.linalg import UnitaryMatrix

_SQRT_HALF = 1.0 / math.sqrt(2.0)
_NAMES = ("H", "P", "X")


@dataclass(frozen=True)
class GateKind:
    """One of ``H``, ``P(theta)`` or ``X``. ``theta`` is kept unreduced."""

    name: str
    theta: float = 0.0

    def __post_init__(self):
        if self.name not in _NAMES:
            raise ValueError(f"unknown gate kind {self.name!r}")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")
        if self.name != "P" and self.theta != 0.0:
            raise ValueError(f"{self.name} takes no angle")

    def matrix(self) -> np.ndarray:
        if self.name == "H":
            return np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=np.complex128)
        if self.name == "X":
            return np.array([[0, 1], [1, 0]], dtype=np.complex128)
        return np.array([[1, 0], [0, np.exp(1j * self.theta)]], dtype=np.complex128)

    def inverse(self) -> "GateKind":
        return P(-self.theta) if self.name == "P" else self

    def __str__(self) -> str:
        return f"P({self.theta!r})" if self.name == "P" else self.name


H = GateKind("H")
X = GateKind("X")


def P(theta: float) -> GateKind:
    return GateKind("P", float(theta))


def gate_matrix(kind: GateKind) -> UnitaryMatrix:
    return UnitaryMatrix.certify(kind.matrix())


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    target: int
    controls: tuple[int, ...] = ()

    def __post_init__(self):
        ctrl = tuple(sorted(set(int(c) for c in self.controls)))
        if len(ctrl) != len(self.controls):
            raise ValueError("duplicate control qubit")
        object.__setattr__(self, "controls", ctrl)
        if self.target < 0 or any(c < 0 for c in ctrl):
            raise ValueError("qubit indices must be non-negative")
        if self.target in ctrl:
            raise ValueError(f"target {self.target} is also a control")

    def inverse(self) -> "Gate":
        return Gate(self.kind.inverse(), self.target, self.controls)


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a circuit needs at least one qubit")
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for g in gates:
            if g.target >= self.n or (g.controls and g.controls[-1] >= self.n):
                raise ValueError(f"gate {g} addresses a qubit outside 0..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if not isinstance(other, Circuit):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("cannot concatenate circuits on different qubit counts")
        return Circuit(self.n, self.gates + other.gates)

    def inverse(self) -> "Circuit":
        return Circuit(self.n, tuple(g.inverse() for g in reversed(self.gates)))

    @classmethod
    def concat(cls, n: int, parts: Iterable["Circuit"]) -> "Circuit":
        gates: list[Gate] = []
        for part in parts:
            if part.n != n:
                raise ValueError("cannot concatenate circuits on different qubit counts")
            gates.extend(part.gates)
        return cls(n, tuple(gates))


def lower(c: Circuit):
    """Flatten a circuit into the array form consumed by the kernels."""
    ng = len(c.gates)
    tmasks = np.empty(ng, dtype=np.int64)
    cmasks = np.empty(ng, dtype=np.int64)
    kinds = np.empty(ng, dtype=np.int8)
    mats = np.zeros((ng, 4), dtype=np.complex128)
    top = c.n - 1
    cache: dict[GateKind, tuple[int, np.ndarray]] = {}
    for g_idx, g in enumerate(c.gates):
        tmasks[g_idx] = 1 << (top - g.target)
        cm = 0
        for q in g.controls:
            cm |= 1 << (top - q)
        cmasks[g_idx] = cm
        entry = cache.get(g.kind)
        if entry is None:
            code = {"X": kernels.KIND_X, "P": kernels.KIND_PHASE}.get(g.kind.name, kernels.KIND_MATRIX)
            entry = cache[g.kind] = (code, g.kind.matrix().ravel())
        kinds[g_idx] = entry[0]
        mats[g_idx] = entry[1]
    return tmasks, cmasks, kinds, mats


def _run(c: Circuit, state: np.ndarray, backend: str | None) -> np.ndarray:
    fn = kernels.BACKENDS[backend] if backend else kernels.apply_gates
    if c.gates:
        fn(state, *lower(c))
    return state


def circuit_unitary(c: Circuit, backend: str | None = None) -> UnitaryMatrix:
    """The 2**n x 2**n matrix of ``c`` (first listed gate is rightmost)."""
    dim = 1 << c.n
    u = _run(c, np.eye(dim, dtype=np.complex128), backend)
    return UnitaryMatrix.certify(u)


def apply_circuit(c: Circuit, state: Sequence[complex] | np.ndarray, backend: str | None = None) -> np.ndarray:
    """Apply ``c`` to a state vector gate by gate; returns a new array."""
    s = np.array(state, dtype=np.complex128).reshape(-1)
    if s.shape[0] != 1 << c.n:
        raise ValueError(f"state has dimension {s.shape[0]}, circuit needs {1 << c.n}")
    out = _run(c, s.reshape(-1, 1).copy(), backend)
    return out.reshape(-1)


@dataclass(frozen=True)
class GateStats:
    h: int = 0
    p: int = 0
    x: int = 0
    max_controls: int = 0

    @property
    def total(self) -> int:
        return self.h + self.p + self.x

    def as_dict(self) -> dict[str, int]:
        return {"H": self.h, "P": self.p, "X": self.x, "total": self.total, "max_controls": self.max_controls}


def gate_stats(c: Circuit) -> GateStats:
    counts = {"H": 0, "P": 0, "X": 0}
    arity = 0
    for g in c.gates:
        counts[g.kind.name] += 1
        arity = max(arity, len(g.controls))
    return GateStats(counts["H"], counts["P"], counts["X"], arity)
