"""Hot polynomial kernels.

The compiled backend is used when it has been built; otherwise the
pure-Python one.  Set ``SCHUBERT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels as python_backend

try:
    if os.environ.get("SCHUBERT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as compiled_backend
except ImportError:
    compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = _active.BACKEND
swap = _active.swap
divided_difference = _active.divided_difference
multiply = _active.multiply
add_scaled = _active.add_scaled

__all__ = [
    "BACKEND",
    "add_scaled",
    "compiled_backend",
    "divided_difference",
    "multiply",
    "python_backend",
    "swap",
]
