"""Hot inner loops behind a backend switch.

``WITTFORGE_DISABLE_NUMBA=1`` (read at import time) or a missing numba
install selects the vectorized numpy implementations; otherwise the numba
loop kernels are used. Both modules stay importable so tests can compare them.
"""
from ..config import numba_disabled
from . import _numpy as numpy_backend

try:
    if numba_disabled():
        raise ImportError("numba disabled by WITTFORGE_DISABLE_NUMBA")
    from . import _numba as numba_backend
except ImportError:
    numba_backend = None

_active = numba_backend if numba_backend is not None else numpy_backend
BACKEND = "numba" if _active is numba_backend else "numpy"

check_quadratic = _active.check_quadratic
orth_mask = _active.orth_mask
gauss_sum = _active.gauss_sum
map_images = _active.map_images
is_isometry = _active.is_isometry
power_iteration = _active.power_iteration
associativity_defect = _active.associativity_defect

__all__ = [
    "BACKEND",
    "numpy_backend",
    "numba_backend",
    "check_quadratic",
    "orth_mask",
    "gauss_sum",
    "map_images",
    "is_isometry",
    "power_iteration",
    "associativity_defect",
]
