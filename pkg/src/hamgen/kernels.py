"""Backend selection for the hot kernels.

The compiled extension is used when importable; set
``HAMGEN_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pycore

EXHAUSTED = _pycore.EXHAUSTED
STOPPED = _pycore.STOPPED
CAPPED = _pycore.CAPPED

_core = None
if os.environ.get("HAMGEN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _core
    except ImportError:  # pragma: no cover - depends on the build
        _core = None

if _core is not None:
    BACKEND = "cython"
    hamilton_search = _core.hamilton_search
    cut_violation = _core.cut_violation
else:
    BACKEND = "python"
    hamilton_search = _pycore.hamilton_search
    cut_violation = _pycore.cut_violation

__all__ = ["BACKEND", "hamilton_search", "cut_violation", "EXHAUSTED", "STOPPED", "CAPPED"]
