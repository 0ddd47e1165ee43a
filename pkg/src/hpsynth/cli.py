"""Command-line interface: ``hpsynth <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from hpsynth.compiler import CompilationError, compile_unitary, default_tolerance, num_qubits_for_dim
from hpsynth.gates import circuit_unitary, gate_stats
from hpsynth.linalg import NotUnitaryError, frobenius_distance, haar_random_unitary
from hpsynth.perms import Permutation, apply_word, word_for_permutation, word_to_circuit
from hpsynth.qft import build_qft, hadamard_group_witness
from hpsynth.textio import FormatError, read_circuit, read_matrix, write_circuit, write_matrix

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _kv(key: str, value) -> None:
    if isinstance(value, float):
        value = format(value, ".17g")
    print(f"{key}={value}")


def _print_stats(stats) -> None:
    for k, v in stats.as_dict().items():
        _kv(k, v)


def _load_matrix(path: str) -> np.ndarray:
    try:
        return read_matrix(path)
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_circuit(path: str):
    try:
        return read_circuit(path)
    except FormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def cmd_compile(args) -> int:
    m = _load_matrix(args.input)
    try:
        n = num_qubits_for_dim(m.shape[0])
        tol = default_tolerance(n) if args.tol is None else args.tol
        result = compile_unitary(m, tol=tol)
    except (ValueError, NotUnitaryError) as exc:
        raise InputError(f"{args.input}: {exc}") from None
    except CompilationError as exc:
        _kv("frobenius_error", exc.error)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    write_circuit(args.out, result.circuit)
    _print_stats(result.ledger)
    _kv("factors", result.factor_count)
    _kv("frobenius_error", result.reconstruction_error)
    return EXIT_OK


def cmd_verify(args) -> int:
    m = _load_matrix(args.matrix)
    c = _load_circuit(args.circuit)
    if m.shape[0] != 1 << c.n:
        raise InputError(f"matrix dimension {m.shape[0]} does not match {c.n} qubits")
    err = frobenius_distance(circuit_unitary(c), m)
    _kv("frobenius_error", err)
    tol = default_tolerance(c.n) if args.tol is None else args.tol
    return EXIT_OK if err <= tol else EXIT_VERIFY


def cmd_qft(args) -> int:
    if args.m < 1:
        raise InputError("--m must be positive")
    write_matrix(args.out, build_qft(args.m, normalized=not args.unnormalized))
    return EXIT_OK


def cmd_random(args) -> int:
    if args.n < 1 or not 0 <= args.seed < 2**64:
        raise InputError("--n must be positive and --seed an unsigned 64-bit integer")
    write_matrix(args.out, haar_random_unitary(1 << args.n, args.seed))
    return EXIT_OK


def cmd_perm_word(args) -> int:
    try:
        image = tuple(int(x) for x in args.perm.split(","))
        p = Permutation(image)
    except ValueError as exc:
        raise InputError(f"--perm: {exc}") from None
    if p.n_states != 1 << args.n:
        raise InputError(f"--perm has {p.n_states} entries, expected {1 << args.n}")
    word = word_for_permutation(p)
    if apply_word(word, p.n_states) != p:  # pragma: no cover - internal consistency
        print("error: generator word does not reproduce the permutation", file=sys.stderr)
        return EXIT_VERIFY
    _kv("word", " ".join(word))
    _kv("length", len(word))
    _kv("gates", len(word_to_circuit(word, args.n)))
    return EXIT_OK


def cmd_witness(args) -> int:
    report = hadamard_group_witness()
    for line in report.lines():
        print(line)
    return EXIT_OK if report.holds else EXIT_VERIFY


def cmd_stats(args) -> int:
    _print_stats(gate_stats(_load_circuit(args.circuit)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hpsynth", description="Compile unitaries to controlled H/P/X circuits.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a unitary matrix file to a circuit file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("verify", help="simulate a circuit and compare with a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--circuit", required=True)
    p.add_argument("--tol", type=float)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qft", help="write the QFT matrix on m qubits")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--unnormalized", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_qft)

    p = sub.add_parser("random", help="write a Haar-random unitary on n qubits")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("perm-word", help="generator word and circuit size for a permutation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", required=True, help="comma-separated images, e.g. 1,0,2,3")
    p.set_defaults(func=cmd_perm_word)

    p = sub.add_parser("witness", help="check that H alone cannot produce P(pi/2)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("stats", help="gate counts of a circuit file")
    p.add_argument("--circuit", required=True)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
