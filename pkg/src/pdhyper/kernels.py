"""Backend selection for the hot kernels.

The compiled extension is used when available; set PDHYPER_PURE_PYTHON=1
to force the pure-Python fallback. ``BACKEND`` reports which one won.
"""

import os

import numpy as np

from . import _kernels_py

if os.environ.get("PDHYPER_PURE_PYTHON"):
    _backend = _kernels_py
else:
    try:
        from . import _kernels as _backend
    except ImportError:
        _backend = _kernels_py

BACKEND = _backend.NAME

disk_hit_lists = _backend.disk_hit_lists


def all_traces_realized(masks, kmask, positions, empty_trace, n):
    """Dispatch the trace check; the compiled path needs n <= 64."""
    if _backend is not _kernels_py and n <= 64:
        mk = np.asarray(masks, dtype=np.uint64)
        pos = np.asarray(positions, dtype=np.int64)
        return _backend.all_traces_realized(mk, int(kmask), pos, bool(empty_trace))
    return _kernels_py.all_traces_realized(masks, kmask, positions, empty_trace)
