"""Numba acceleration switch for the hot numeric kernels.

Kernels are written as plain loops over numpy arrays so the exact same
source runs either JIT-compiled (default, when numba is importable) or as
ordinary Python. Set APKTRIAGE_NO_NUMBA=1 to force the plain-numpy path;
``benchmarks/bench_ciphers.py`` compares the two.
"""

import os

NUMBA_ENABLED = os.environ.get("APKTRIAGE_NO_NUMBA", "") not in ("1", "true", "yes")

if NUMBA_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def jit_kernel(fn):
        return _njit(cache=True)(fn)
else:
    def jit_kernel(fn):
        return fn
