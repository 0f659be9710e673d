"""Backend selection for the hot kernels.

The compiled Cython module is used when it imports; otherwise the numpy
fallback.  Set ``RINDLER_ATOM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("RINDLER_ATOM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
laguerre = _impl.laguerre
radial_norm = _impl.radial_norm
radial_values = _impl.radial_values
legendre = _impl.legendre
plane_density = _impl.plane_density


def available_backends() -> dict:
    """Map backend name to module for every backend that imports."""
    found = {"python": _kernels_py}
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found
