"""Pure numpy implementation of the gate-application kernel.

Mirrors ``_kernels.pyx`` exactly; used when the compiled extension is not
built or when ``HPSYNTH_PURE_PYTHON`` is set.
"""

from functools import lru_cache

import numpy as np

KIND_MATRIX = 0
KIND_X = 1
KIND_PHASE = 2


@lru_cache(maxsize=4096)
def _pair_rows(dim: int, tmask: int, cmask: int) -> np.ndarray:
    idx = np.arange(dim, dtype=np.int64)
    rows = idx[((idx & tmask) == 0) & ((idx & cmask) == cmask)]
    rows.setflags(write=False)
    return rows


def apply_gates(state, tmasks, cmasks, kinds, mats):
    """Apply controlled 2x2 gates in order to the rows of ``state``, in place.

    ``state`` is a (2**n, k) complex128 array whose rows are basis indices.
    Gate ``g`` acts on every row pair ``(r, r | tmasks[g])`` with the target
    bit clear in ``r`` and all bits of ``cmasks[g]`` set. ``mats[g]`` holds
    the 2x2 matrix row-major as four entries.
    """
    dim = state.shape[0]
    for t, c, k, m in zip(tmasks.tolist(), cmasks.tolist(), kinds.tolist(), mats):
        lo = _pair_rows(dim, t, c)
        hi = lo | t
        if k == KIND_X:
            tmp = state[lo]
            state[lo] = state[hi]
            state[hi] = tmp
        elif k == KIND_PHASE:
            state[hi] *= m[3]
        else:
            a = state[lo]
            b = state[hi]
            state[lo] = m[0] * a + m[1] * b
            state[hi] = m[2] * a + m[3] * b
    return state
