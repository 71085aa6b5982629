"""Backend selection for the numeric kernels.

Set ``MDGIRTH_BACKEND=numpy`` to force the pure-numpy code paths even when
numba is importable.  Any other value (or unset) uses numba when available.
"""

import os

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False

BACKEND_ENV = "MDGIRTH_BACKEND"


def _requested_backend():
    return os.environ.get(BACKEND_ENV, "numba").strip().lower()


USE_NUMBA = HAVE_NUMBA and _requested_backend() != "numpy"


def backend_name():
    return "numba" if USE_NUMBA else "numpy"


def maybe_njit(func):
    """Compile ``func`` with numba if it is installed, else return it unchanged.

    The loop kernels are written so they also run (slowly) as plain Python;
    the benchmark relies on that to time both variants side by side.
    """
    if HAVE_NUMBA:
        return numba.njit(cache=True, nogil=True)(func)
    return func
