# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate-application kernel. Same contract as ``_kernels_py``."""

cdef enum:
    KIND_MATRIX = 0
    KIND_X = 1
    KIND_PHASE = 2


def apply_gates(double complex[:, ::1] state,
                long long[::1] tmasks,
                long long[::1] cmasks,
                signed char[::1] kinds,
                double complex[:, ::1] mats):
    cdef Py_ssize_t dim = state.shape[0]
    cdef Py_ssize_t ncol = state.shape[1]
    cdef Py_ssize_t ngates = tmasks.shape[0]
    cdef Py_ssize_t g, r, hi, col
    cdef long long t, c
    cdef double complex m0, m1, m2, m3, a, b
    cdef signed char k

    if cmasks.shape[0] != ngates or kinds.shape[0] != ngates or mats.shape[0] != ngates:
        raise ValueError("gate arrays have inconsistent lengths")
    if mats.shape[1] != 4:
        raise ValueError("mats must have shape (ngates, 4)")

    with nogil:
        for g in range(ngates):
            t = tmasks[g]
            c = cmasks[g]
            k = kinds[g]
            m0 = mats[g, 0]
            m1 = mats[g, 1]
            m2 = mats[g, 2]
            m3 = mats[g, 3]
            for r in range(dim):
                if (r & t) != 0 or (r & c) != c:
                    continue
                hi = r | t
                if k == KIND_X:
                    for col in range(ncol):
                        a = state[r, col]
                        state[r, col] = state[hi, col]
                        state[hi, col] = a
                elif k == KIND_PHASE:
                    for col in range(ncol):
                        state[hi, col] = m3 * state[hi, col]
                else:
                    for col in range(ncol):
                        a = state[r, col]
                        b = state[hi, col]
                        state[r, col] = m0 * a + m1 * b
                        state[hi, col] = m2 * a + m3 * b
    return state
