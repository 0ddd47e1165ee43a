"""Backend selection for the gate-application kernel.

The Cython extension is used when it has been built; otherwise, or when the
environment variable ``HPSYNTH_PURE_PYTHON`` is set to a non-empty value,
the numpy fallback is used. Both share one signature, see
:func:`hpsynth._kernels_py.apply_gates`.
"""

import os

from hpsynth import _kernels_py
from hpsynth._kernels_py import KIND_MATRIX, KIND_PHASE, KIND_X

BACKENDS = {"python": _kernels_py.apply_gates}

try:
    from hpsynth import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None
else:
    BACKENDS["cython"] = _kernels_c.apply_gates

if os.environ.get("HPSYNTH_PURE_PYTHON") or "cython" not in BACKENDS:
    BACKEND = "python"
else:
    BACKEND = "cython"

apply_gates = BACKENDS[BACKEND]

__all__ = ["BACKEND", "BACKENDS", "KIND_MATRIX", "KIND_PHASE", "KIND_X", "apply_gates"]
