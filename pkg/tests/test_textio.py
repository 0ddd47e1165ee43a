import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hpsynth.gates import Circuit, Gate, GateKind, H, P, X
from hpsynth.linalg import haar_random_unitary
from hpsynth.textio import (
    FormatError,
    format_circuit,
    format_matrix,
    parse_circuit,
    parse_matrix,
    read_matrix,
    write_matrix,
)

finite = st.floats(allow_nan=False, allow_infinity=False)


def test_matrix_format_layout():
    text = format_matrix(np.eye(2))
    assert text.splitlines() == ["dim 2", "1 0 0 0", "0 0 1 0"]
    text = format_matrix(np.array([[1 / 3 + 0.1j]]))
    assert text.splitlines()[1] == "0.33333333333333331 0.10000000000000001"


def test_matrix_comments_and_blank_lines():
    text = "# a comment\n\ndim 1\n  # another\n0.5 -0.25\n"
    assert parse_matrix(text)[0, 0] == 0.5 - 0.25j


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(finite, min_size=2 * n * n, max_size=2 * n * n)))
def test_matrix_round_trip_exact(vals):
    n = int(math.isqrt(len(vals) // 2))
    a = np.array(vals[0::2]).reshape(n, n) + 1j * np.array(vals[1::2]).reshape(n, n)
    b = parse_matrix(format_matrix(a))
    assert np.array_equal(a, b)


def test_matrix_file_round_trip(tmp_path):
    u = haar_random_unitary(8, 3)
    write_matrix(tmp_path / "u.txt", u)
    assert np.array_equal(read_matrix(tmp_path / "u.txt"), np.asarray(u))


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("", 1),
        ("dims 2\n", 1),
        ("dim 0\n", 1),
        ("# c\ndim 1\n1 0 0\n", 3),
        ("dim 2\n1 0 0 0\n0 0 x 0\n", 3),
        ("dim 2\n1 0 0 0\n", 3),
        ("dim 1\n1 0\n1 0\n", 3),
        ("dim 1\nnan 0\n", 2),
    ],
)
def test_matrix_errors_name_line(text, lineno):
    with pytest.raises(FormatError) as info:
        parse_matrix(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_circuit_format_layout():
    c = Circuit(3, (Gate(H, 0), Gate(P(math.pi), 1, (0, 2)), Gate(X, 2, (1,))))
    assert format_circuit(c).splitlines() == [
        "qubits 3",
        "H t=0 c=",
        "P t=1 c=0,2 theta=3.1415926535897931",
        "X t=2 c=1",
    ]


@st.composite
def circuits(draw):
    n = draw(st.integers(1, 5))
    gates = []
    for _ in range(draw(st.integers(0, 20))):
        name = draw(st.sampled_from("HPX"))
        theta = draw(finite) if name == "P" else 0.0
        t = draw(st.integers(0, n - 1))
        ctrl = draw(st.lists(st.sampled_from([q for q in range(n) if q != t]), unique=True)) if n > 1 else []
        gates.append(Gate(GateKind(name, theta), t, tuple(ctrl)))
    return Circuit(n, tuple(gates))


@settings(max_examples=100, deadline=None)
@given(circuits())
def test_circuit_round_trip_exact(c):
    back = parse_circuit(format_circuit(c))
    assert back == c
    for g1, g2 in zip(back.gates, c.gates):
        assert math.copysign(1, g1.kind.theta) == math.copysign(1, g2.kind.theta)


@pytest.mark.parametrize(
    "text,lineno",
    [
        ("", 1),
        ("qubit 2\n", 1),
        ("qubits 2\nH t=0 c=\nY t=0 c=\n", 3),
        ("qubits 2\nP t=0 c=\n", 2),
        ("qubits 2\nH t=0 c= theta=1\n", 2),
        ("qubits 2\nX t=2 c=\n", 2),
        ("qubits 2\nX t=0 c=0\n", 2),
        ("qubits 2\n# x\nX t=0 c=5\n", 3),
        ("qubits 2\nP t=0 c=1 theta=inf\n", 2),
    ],
)
def test_circuit_errors_name_line(text, lineno):
    with pytest.raises(FormatError) as info:
        parse_circuit(text)
    assert info.value.lineno == lineno
