"""Numba detection.

Set ``APFC_NO_NUMBA=1`` to force the pure-numpy kernels even when numba is
importable. The flag is read once, at import time.
"""
import os
import warnings

_disabled = os.environ.get("APFC_NO_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _disabled:
        raise ImportError("disabled by APFC_NO_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError as exc:
    HAVE_NUMBA = False
    if not _disabled:
        warnings.warn(f"numba unavailable ({exc}); using numpy kernels, which are slower")

    def njit(*args, **kwargs):
        # bare @njit and @njit(...) both work
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def decorator(func):
            return func
        return decorator

DEFAULT_BACKEND = "numba" if HAVE_NUMBA else "numpy"
