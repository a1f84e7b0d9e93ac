"""Pick the raster kernel implementation at import time.

The compiled extension is preferred; ``XCYCLOID_PURE_PYTHON=1`` forces the
numpy fallback.
"""

import os
from types import ModuleType

from . import _pykernels


def _try_compiled() -> ModuleType | None:
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


def load(name: str | None = None) -> ModuleType:
    """Return the kernels for ``name`` ("cython" or "python"), or the default."""
    if name == "python":
        return _pykernels
    if name == "cython":
        compiled = _try_compiled()
        if compiled is None:
            raise ImportError("compiled raster kernels are not built")
        return compiled
    if name is not None:
        raise ValueError(f"unknown raster backend {name!r}")
    if os.environ.get("XCYCLOID_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels
    return _try_compiled() or _pykernels


def available() -> list[str]:
    names = ["python"]
    if _try_compiled() is not None:
        names.insert(0, "cython")
    return names


kernels = load()
BACKEND = "cython" if kernels is not _pykernels else "python"
