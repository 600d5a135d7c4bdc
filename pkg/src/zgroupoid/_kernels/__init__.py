"""Kernel dispatch.

The numba backend is used unless ``ZGROUPOID_DISABLE_NUMBA`` is set to a
truthy value or numba cannot be imported; the numpy backend is then used.
Both backends are importable directly for benchmarking and cross-checks.
"""
import os

import numpy as np

from . import _numpy as numpy_impl

_DISABLED = os.environ.get("ZGROUPOID_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

numba_impl = None
if not _DISABLED:
    try:
        from . import _numba as numba_impl
    except ImportError:  # pragma: no cover - numba missing
        numba_impl = None

_impl = numba_impl if numba_impl is not None else numpy_impl
BACKEND = "numba" if _impl is numba_impl else "numpy"

grid_distance = _impl.grid_distance
push_forward = _impl.push_forward
cycle_representatives = _impl.cycle_representatives
orbit_counts = _impl.orbit_counts
cesaro_sum = _impl.cesaro_sum
cesaro_distances = _impl.cesaro_distances


def warmup():
    """Trigger JIT compilation so later timings exclude it."""
    w = np.ones(3)
    m = np.array([1, 2, 0], dtype=np.int64)
    grid_distance(3)
    push_forward(w, m)
    cycle_representatives(m)
    orbit_counts(m, 0, 3)
    cesaro_sum(w, m, 2)
    cesaro_distances(w, m, 2, w)
    return BACKEND
