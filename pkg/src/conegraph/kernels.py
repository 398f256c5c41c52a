"""Dispatch to the active kernel backend (see ``_backend``)."""
from ._backend import BACKEND

if BACKEND == "numba":
    from ._kernels_numba import (  # noqa: F401
        all_pairs,
        cone_matrix,
        theta_targets,
        yao_targets,
        yaoyao_filter,
    )
else:
    from ._kernels_numpy import (  # noqa: F401
        all_pairs,
        cone_matrix,
        theta_targets,
        yao_targets,
        yaoyao_filter,
    )

__all__ = ["BACKEND", "all_pairs", "cone_matrix", "theta_targets", "yao_targets", "yaoyao_filter"]
