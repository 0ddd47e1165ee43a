"""Basis-state permutations as circuits of multi-controlled NOT gates.

Two generators suffice for S_N (N = 2**n): the transposition
``T = (N-2, N-1)``, which is a single X on the last qubit controlled by all
the others, and the cycle ``C: x -> x+1 mod N``, an increment cascade.
Conjugating gives ``C^m T C^-m = (N-2+m, N-1+m) mod N``, so every adjacent
transposition ``(k, k+1)`` is ``T`` conjugated by ``C^{(k+2) mod N}``.

Generator words are in application order, like circuits: the first symbol
acts first. Symbols are ``"T"``, ``"C"`` and ``"C-"`` (the inverse cycle).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from hpsynth.gates import Circuit, Gate, X
from hpsynth.linalg import UnitaryMatrix

SYMBOLS = ("T", "C", "C-")

GeneratorWord = list[str]


@dataclass(frozen=True)
class Permutation:
    """``image[x]`` is where basis state x is sent."""

    image: tuple[int, ...]

    def __post_init__(self):
        img = tuple(int(v) for v in self.image)
        if not img or sorted(img) != list(range(len(img))):
            raise ValueError(f"not a bijection on 0..{len(img) - 1}: {img}")
        object.__setattr__(self, "image", img)

    @property
    def n_states(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n_states: int) -> "Permutation":
        return cls(tuple(range(n_states)))

    @classmethod
    def transposition(cls, n_states: int, a: int, b: int) -> "Permutation":
        img = list(range(n_states))
        img[a], img[b] = img[b], img[a]
        return cls(tuple(img))

    def __call__(self, x: int) -> int:
        return self.image[x]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.image[other.image[x]] for x in range(other.n_states)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n_states
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))


def _num_qubits(n_states: int) -> int:
    n = n_states.bit_length() - 1
    if n < 1 or 1 << n != n_states:
        raise ValueError(f"number of states {n_states} is not a power of two >= 2")
    return n


def transposition_circuit(n: int) -> Circuit:
    if n < 1:
        raise ValueError("need at least one qubit")
    return Circuit(n, (Gate(X, n - 1, tuple(range(n - 1))),))


def increment_circuit(n: int) -> Circuit:
    """``|x> -> |x+1 mod 2**n>`` without ancillas.

    Qubit q flips when every less significant qubit is 1; flipping the most
    significant qubit first keeps the control values unmodified.
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    return Circuit(n, tuple(Gate(X, q, tuple(range(q + 1, n))) for q in range(n)))


def apply_word(word: Sequence[str], n_states: int) -> Permutation:
    img = np.arange(n_states)
    for sym in word:
        if sym == "T":
            a, b = n_states - 2, n_states - 1
            sel_a, sel_b = img == a, img == b
            img[sel_a], img[sel_b] = b, a
        elif sym == "C":
            img = (img + 1) % n_states
        elif sym == "C-":
            img = (img - 1) % n_states
        else:
            raise ValueError(f"unknown generator symbol {sym!r}")
    return Permutation(tuple(img.tolist()))


def _cycle_power(k: int, n_states: int) -> list[str]:
    k %= n_states
    if k <= n_states // 2:
        return ["C"] * k
    return ["C-"] * (n_states - k)


def _reduce(tokens: list, n_states: int) -> GeneratorWord:
    # tokens: "T" or int cycle powers; cancel T T and merge powers mod N
    stack: list = []
    for tok in tokens:
        if tok == "T":
            if stack and stack[-1] == "T":
                stack.pop()
            else:
                stack.append("T")
        else:
            if stack and stack[-1] != "T":
                tok = stack.pop() + tok
            tok %= n_states
            if tok:
                stack.append(tok)
    word: GeneratorWord = []
    for tok in stack:
        word.extend(["T"] if tok == "T" else _cycle_power(tok, n_states))
    return word


def adjacent_transpositions(p: Permutation) -> list[int]:
    """``k`` values such that applying (k, k+1) in the listed order gives ``p``.

    Bubble-sorts the inverse permutation; the count equals the number of
    inversions of ``p``.
    """
    inv = list(p.inverse().image)
    swaps: list[int] = []
    n = len(inv)
    for end in range(n - 1, 0, -1):
        for k in range(end):
            if inv[k] > inv[k + 1]:
                inv[k], inv[k + 1] = inv[k + 1], inv[k]
                swaps.append(k)
    # swaps sort p into the identity; p is their composition in reverse
    return swaps[::-1]


def _inversions(image: Sequence[int]) -> int:
    n = len(image)
    return sum(1 for a in range(n) for b in range(a + 1, n) if image[a] > image[b])


def word_for_permutation(p: Permutation) -> GeneratorWord:
    """A reduced generator word whose action is ``p``.

    ``p`` is split as ``C^s o q`` with the shift s chosen to minimize the
    inversions of q; q is then bubble-sorted into adjacent transpositions,
    each written as a conjugate of T.
    """
    n_states = p.n_states
    if n_states < 2:
        return []

    def cost(s: int) -> tuple[int, int]:
        return _inversions([(y - s) % n_states for y in p.image]), min(s, n_states - s)

    shift = min(range(n_states), key=cost)
    q = Permutation(tuple((y - shift) % n_states for y in p.image))
    tokens: list = []
    for k in adjacent_transpositions(q):
        m = (k + 2) % n_states
        tokens += [-m, "T", m]
    tokens.append(shift)
    return _reduce(tokens, n_states)


def word_to_circuit(word: Sequence[str], n: int) -> Circuit:
    parts = {
        "T": transposition_circuit(n).gates,
        "C": increment_circuit(n).gates,
        "C-": increment_circuit(n).inverse().gates,
    }
    gates = []
    for sym in word:
        try:
            gates.extend(parts[sym])
        except KeyError:
            raise ValueError(f"unknown generator symbol {sym!r}") from None
    return Circuit(n, tuple(gates))


def permutation_circuit(p: Permutation) -> Circuit:
    return word_to_circuit(word_for_permutation(p), _num_qubits(p.n_states))


def pair_placement_permutation(i: int, j: int, n_states: int) -> Permutation:
    """Send i to N-1 and j to N-2; the other states keep their relative order."""
    if i == j:
        raise ValueError("indices must differ")
    if not 0 <= j < i < n_states:
        raise ValueError(f"need 0 <= j < i < {n_states}")
    img = [0] * n_states
    img[i], img[j] = n_states - 1, n_states - 2
    slot = 0
    for x in range(n_states):
        if x not in (i, j):
            img[x] = slot
            slot += 1
    return Permutation(tuple(img))


def permutation_matrix(p: Permutation) -> UnitaryMatrix:
    n = p.n_states
    m = np.zeros((n, n), dtype=np.complex128)
    m[list(p.image), list(range(n))] = 1.0
    return UnitaryMatrix.certify(m)
