"""Backend selection for the grid kernels.

The hot loops exist twice: numba ``@njit`` kernels in ``_kernels`` and a
vectorized pure-numpy fallback in ``_numpy_backend``.  The environment
variable ``LEXINEQ_BACKEND`` picks the lane:

* unset or ``auto`` -- numba when importable, else numpy;
* ``numba`` -- require numba (error if it is unavailable);
* ``numpy`` -- force the fallback and skip importing numba entirely.

``force_backend`` is an in-process override used by the tests and the
benchmark to compare both lanes side by side.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernels, _numpy_backend

ENV_VAR = "LEXINEQ_BACKEND"

_forced: str | None = None


def backend_name() -> str:
    """Resolve the active backend name ("numba" or "numpy")."""
    if _forced is not None:
        return _forced
    env = os.environ.get(ENV_VAR, "auto").strip().lower() or "auto"
    if env == "auto":
        return "numba" if _kernels.HAVE_NUMBA else "numpy"
    if env == "numba":
        if not _kernels.HAVE_NUMBA:
            raise RuntimeError(
                "LEXINEQ_BACKEND=numba but numba is not importable in this environment"
            )
        return "numba"
    if env == "numpy":
        return "numpy"
    raise ValueError(f"unknown {ENV_VAR} value {env!r}; expected 'numba', 'numpy' or 'auto'")


@contextmanager
def force_backend(name: str):
    """Temporarily pin the backend, bypassing the environment flag."""
    global _forced
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not _kernels.HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not available")
    previous = _forced
    _forced = name
    try:
        yield
    finally:
        _forced = previous


def _module():
    return _kernels if backend_name() == "numba" else _numpy_backend


def region_grid(a1, a2, kinds, pa, pb, zr, zi):
    return _module().region_grid(a1, a2, kinds, pa, pb, zr, zi)


def region_grid_margin(a1, a2, kinds, pa, pb, zr, zi):
    return _module().region_grid_margin(a1, a2, kinds, pa, pb, zr, zi)


def linear_grid(ar, ai, br, bi, zr, zi):
    return _module().linear_grid(ar, ai, br, bi, zr, zi)


def system_grid(ar, ai, br, bi, cr, ci, dr, di, zr, zi):
    return _module().system_grid(ar, ai, br, bi, cr, ci, dr, di, zr, zi)


def fractional_grid(ar, ai, br, bi, cr, ci, dr, di, zr, zi):
    return _module().fractional_grid(ar, ai, br, bi, cr, ci, dr, di, zr, zi)


def quadratic_grid(ar, ai, br, bi, cr, ci, zr, zi):
    return _module().quadratic_grid(ar, ai, br, bi, cr, ci, zr, zi)
