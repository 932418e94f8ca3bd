"""Numba acceleration switch.

Hot kernels are written once as numpy code and decorated with ``njit``.
Setting ``PARTPRED_NO_NUMBA=1`` (or any non-empty value other than ``0``)
replaces the decorator with a no-op so the same source runs as plain
numpy/Python, which is slower but easier to debug and has no compile step.
The fallback also engages automatically when numba is not importable.

Both paths execute the identical sequence of float64 operations, so results
are bitwise equal; ``benchmarks/bench_transe.py`` compares their speed.
"""

import os

_flag = os.environ.get("PARTPRED_NO_NUMBA", "").strip()
_disabled = _flag not in ("", "0")

NUMBA_ENABLED = False

if not _disabled:
    try:
        from numba import njit  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:
        pass

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):
        """No-op stand-in for numba.njit; keeps call sites unchanged."""
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(func):
            return func

        return wrap
