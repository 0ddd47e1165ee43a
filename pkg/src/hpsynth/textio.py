"""Plain-text matrix and circuit files.

Matrix file::

    # comment
    dim 2
    0.70710678118654757 0 0.70710678118654757 0
    0.70710678118654757 0 -0.70710678118654757 0

Each row lists ``re im`` pairs for its N entries. Circuit file::

    qubits 2
    H t=0 c=
    P t=1 c=0 theta=1.5707963267948966
    X t=1 c=0

Gates are listed in application order. Floats are written with 17
significant digits, so write-then-read is value-identical.
"""

from __future__ import annotations

import os
import re

import numpy as np

from hpsynth.gates import Circuit, Gate, GateKind

_GATE_RE = re.compile(
    r"^(?P<name>[HPX])\s+t=(?P<t>\d+)\s+c=(?P<c>(?:\d+(?:,\d+)*)?)"
    r"(?:\s+theta=(?P<theta>\S+))?$"
)


class FormatError(ValueError):
    """Malformed matrix or circuit text. ``lineno`` is 1-based."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _f17(x: float) -> str:
    return format(float(x), ".17g")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def format_matrix(m) -> str:
    a = np.asarray(m, dtype=np.complex128)
    lines = [f"dim {a.shape[0]}"]
    for row in a:
        lines.append(" ".join(f"{_f17(z.real)} {_f17(z.imag)}" for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(1, "empty matrix file") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "dim" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise FormatError(lineno, f"expected 'dim N', got {header!r}")
    n = int(parts[1])
    out = np.empty((n, n), dtype=np.complex128)
    last = lineno
    for row in range(n):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise FormatError(last + 1, f"expected {n} matrix rows, found {row}") from None
        last = lineno
        fields = line.split()
        if len(fields) != 2 * n:
            raise FormatError(lineno, f"expected {2 * n} numbers, found {len(fields)}")
        try:
            vals = [float(f) for f in fields]
        except ValueError as exc:
            raise FormatError(lineno, str(exc)) from None
        if not all(np.isfinite(vals)):
            raise FormatError(lineno, "non-finite entry")
        out[row] = np.array(vals[0::2]) + 1j * np.array(vals[1::2])
    extra = next(lines, None)
    if extra is not None:
        raise FormatError(extra[0], "unexpected content after the last row")
    return out


def format_circuit(c: Circuit) -> str:
    lines = [f"qubits {c.n}"]
    for g in c.gates:
        ctrl = ",".join(str(q) for q in g.controls)
        line = f"{g.kind.name} t={g.target} c={ctrl}"
        if g.kind.name == "P":
            line += f" theta={_f17(g.kind.theta)}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError(1, "empty circuit file") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "qubits" or not parts[1].isdigit() or int(parts[1]) < 1:
        raise FormatError(lineno, f"expected 'qubits n', got {header!r}")
    n = int(parts[1])
    gates = []
    for lineno, line in lines:
        m = _GATE_RE.match(line)
        if m is None:
            raise FormatError(lineno, f"cannot parse gate {line!r}")
        name = m["name"]
        if (name == "P") != (m["theta"] is not None):
            raise FormatError(lineno, "theta is required for P and forbidden otherwise")
        try:
            kind = GateKind(name, float(m["theta"]) if m["theta"] is not None else 0.0)
            ctrl = tuple(int(q) for q in m["c"].split(",")) if m["c"] else ()
            gate = Gate(kind, int(m["t"]), ctrl)
            if gate.target >= n or any(q >= n for q in gate.controls):
                raise ValueError(f"qubit index out of range for {n} qubits")
        except ValueError as exc:
            raise FormatError(lineno, str(exc)) from None
        gates.append(gate)
    return Circuit(n, tuple(gates))


def read_matrix(path: str | os.PathLike) -> np.ndarray:
    with open(path) as fh:
        return parse_matrix(fh.read())


def write_matrix(path: str | os.PathLike, m) -> None:
    with open(path, "w") as fh:
        fh.write(format_matrix(m))


def read_circuit(path: str | os.PathLike) -> Circuit:
    with open(path) as fh:
        return parse_circuit(fh.read())


def write_circuit(path: str | os.PathLike, c: Circuit) -> None:
    with open(path, "w") as fh:
        fh.write(format_circuit(c))
