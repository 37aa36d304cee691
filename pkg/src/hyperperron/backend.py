"""Kernel backend selection.

Hot numeric loops exist twice: a numba @njit implementation and a pure-numpy
one with identical semantics.  The environment variable HYPERPERRON_BACKEND
picks one at import time:

    HYPERPERRON_BACKEND=numba   (default) JIT-compiled kernels
    HYPERPERRON_BACKEND=numpy   vectorized fallback, no numba required

If numba is requested but cannot be imported, the numpy fallback is used and
a warning is emitted.
"""

import os
import warnings

BACKEND_ENV = "HYPERPERRON_BACKEND"

_choice = os.environ.get(BACKEND_ENV, "numba").strip().lower() or "numba"
if _choice not in ("numba", "numpy"):
    raise RuntimeError(
        f"{BACKEND_ENV}={_choice!r} not understood; expected 'numba' or 'numpy'"
    )

if _choice == "numba":
    try:
        from . import _kernels_numba as kernels
    except ImportError as exc:  # pragma: no cover - depends on environment
        warnings.warn(f"numba backend unavailable ({exc}); falling back to numpy kernels")
        from . import _kernels_numpy as kernels
else:
    from . import _kernels_numpy as kernels


def backend_name() -> str:
    return kernels.BACKEND_NAME
