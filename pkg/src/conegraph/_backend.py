"""Kernel backend selection.

The hot loops (cone classification, per-cone nearest-neighbour selection,
all-pairs shortest paths) ship twice: as numba ``@njit`` kernels and as
vectorised numpy code.  The choice is made once at import time:

``CONEGRAPH_BACKEND=numpy``   force the pure-numpy path
``CONEGRAPH_BACKEND=numba``   require numba (ImportError if missing)
``NUMBA_DISABLE_JIT=1``       also selects numpy

Default is numba when it imports, numpy otherwise.
"""
from __future__ import annotations

import os

_requested = os.environ.get("CONEGRAPH_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise ImportError(f"CONEGRAPH_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

HAVE_NUMBA = False
if _requested != "numpy" and os.environ.get("NUMBA_DISABLE_JIT", "0") in ("", "0"):
    try:
        import numba

        # the bundled TBB is often too old and warns on every probe
        numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
        HAVE_NUMBA = True
    except ImportError:
        if _requested == "numba":
            raise

BACKEND = "numba" if HAVE_NUMBA else "numpy"
