"""Select the elimination kernels at import time.

The compiled Cython extension is preferred; the pure numpy module is the
fallback.  Set INCLURANK_PURE_KERNELS=1 to force the fallback (used by the
cross-backend parity tests and the benchmark).
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _kernels_py

pure = _kernels_py
compiled: ModuleType | None = None

if os.environ.get("INCLURANK_PURE_KERNELS", "").lower() not in {"1", "true", "yes"}:
    try:
        from . import _kernels as compiled  # type: ignore[no-redef]
    except ImportError:
        compiled = None

active: ModuleType = compiled if compiled is not None else pure

HAVE_COMPILED = compiled is not None


def backend_name() -> str:
    return active.BACKEND_NAME


def get_backend(name: str | None = None) -> ModuleType:
    """Resolve a kernel module by name ('compiled', 'pure', or None for active)."""
    if name is None:
        return active
    if name == "pure":
        return pure
    if name == "compiled":
        if compiled is None:
            raise ValueError("compiled kernels are not available in this build")
        return compiled
    raise ValueError(f"unknown backend {name!r}")
