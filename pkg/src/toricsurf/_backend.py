"""Kernel backend selection.

The compiled extension is preferred when importable; `TORICSURF_BACKEND`
forces the choice ("compiled" or "python").  Individual calls still drop to
the pure-Python kernel when inputs exceed the compiled kernel's 64-bit
safety bounds, so results never depend on which backend happens to be
installed.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCE = os.environ.get("TORICSURF_BACKEND", "").strip().lower()

_compiled = None
if _FORCE not in ("python", "py"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None
        if _FORCE in ("compiled", "c", "cython"):
            raise RuntimeError(
                "TORICSURF_BACKEND requests the compiled kernel but the "
                "extension is not built; reinstall or unset the variable"
            )

_active = _compiled if _compiled is not None else _kernels_py


def active_backend() -> str:
    """Name of the kernel module in use: "compiled" or "python"."""
    return _active.BACKEND_NAME


def kernels_for(xs, ys, cs):
    """Kernel module able to handle these inputs exactly."""
    if _active is _kernels_py or _kernels_py.fits_fast_path(xs, ys, cs):
        return _active
    return _kernels_py


def pure_kernels():
    return _kernels_py


def compiled_kernels():
    """The compiled module, or None when unavailable."""
    return _compiled


def worker_count() -> int:
    """Degree of parallelism for box sweeps (TORICSURF_WORKERS, default: cores)."""
    env = os.environ.get("TORICSURF_WORKERS", "").strip()
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
