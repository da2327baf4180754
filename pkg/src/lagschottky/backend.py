"""Kernel backend selection.

The hot numeric kernels (see kernels.py) exist in two flavors: a numba
@njit-compiled version and a pure-numpy fallback.  Selection happens once at
import time from the environment variable LAGSCHOTTKY_BACKEND:

    auto   (default) use numba when importable, else numpy
    numba  require numba, fail if missing
    numpy  force the pure-numpy path even when numba is installed

Results agree between backends up to eigensolver roundoff; integer outputs
(signatures, Maslov indices) are identical away from tolerance-degenerate
inputs.  benchmarks/bench_backends.py compares both paths.
"""

import os

ENV_VAR = "LAGSCHOTTKY_BACKEND"


def _select() -> bool:
    choice = os.environ.get(ENV_VAR, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise RuntimeError(
            f"{ENV_VAR} must be one of auto/numba/numpy, got {choice!r}")
    if choice == "numpy":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
        return False
    return True


USING_NUMBA = _select()

if USING_NUMBA:
    from numba import njit
else:
    def njit(*args, **kwargs):
        """No-op stand-in for numba.njit on the pure-numpy path."""
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func
        return wrap
