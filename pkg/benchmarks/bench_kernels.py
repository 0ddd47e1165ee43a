"""Time the gate-application kernels on the same lowered circuits.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--max-qubits 6]

Each row applies one compiled circuit to the identity (the full unitary
simulation used for self-verification) with every available backend.
"""

import argparse
import time

import numpy as np

from hpsynth import kernels
from hpsynth.compiler import compile_unitary
from hpsynth.gates import lower
from hpsynth.linalg import haar_random_unitary


def best_of(fn, state, arrays, repeat):
    best = float("inf")
    for _ in range(repeat):
        s = state.copy()
        t = time.perf_counter()
        fn(s, *arrays)
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-qubits", type=int, default=6)
    args = ap.parse_args(argv)

    names = sorted(kernels.BACKENDS)
    print(f"{'n':>2} {'gates':>8} " + " ".join(f"{b + ' [s]':>12}" for b in names) + "  speedup")
    for n in range(2, args.max_qubits + 1):
        dim = 2**n
        circuit = compile_unitary(haar_random_unitary(dim, n)).circuit
        arrays = lower(circuit)
        state = np.eye(dim, dtype=np.complex128)
        times = {b: best_of(kernels.BACKENDS[b], state, arrays, args.repeat) for b in names}
        ref = kernels.BACKENDS["python"](state.copy(), *arrays)
        for b in names:
            out = kernels.BACKENDS[b](state.copy(), *arrays)
            assert np.allclose(out, ref, rtol=0, atol=1e-12), b
        ratio = times["python"] / times["cython"] if "cython" in times else float("nan")
        row = " ".join(f"{times[b]:12.4f}" for b in names)
        print(f"{n:>2} {len(circuit):>8} {row}  {ratio:6.1f}x")


if __name__ == "__main__":
    main()
