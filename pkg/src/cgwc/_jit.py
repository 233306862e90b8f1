"""Optional numba acceleration.

Setting ``CGWC_DISABLE_JIT=1`` in the environment (before the first import)
makes :func:`njit` a no-op decorator, so every kernel runs as plain
numpy/Python.  Compiled kernels keep their interpreted twin on ``.py_func``;
interpreted kernels get a ``.py_func`` pointing at themselves so callers
and benchmarks can treat both modes alike.
"""

from __future__ import annotations

import os

JIT_DISABLED = os.environ.get("CGWC_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes"}

try:  # pragma: no cover - exercised implicitly
    if JIT_DISABLED:
        raise ImportError
    from numba import njit as _numba_njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _numba_njit = None
    HAVE_NUMBA = False


def njit(*args, **kwargs):
    """``numba.njit`` when available and enabled, identity otherwise."""
    if HAVE_NUMBA:
        kwargs.setdefault("cache", True)
        return _numba_njit(*args, **kwargs)

    def wrap(fn):
        fn.py_func = fn
        return fn

    if len(args) == 1 and callable(args[0]) and not kwargs:
        return wrap(args[0])
    return wrap


def backend() -> str:
    return "numba" if HAVE_NUMBA else "python"
