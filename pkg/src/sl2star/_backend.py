"""Selects the arithmetic kernel at import time.

Preference order: compiled Cython kernel if built, else the pure-Python twin.
Set ``SL2STAR_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
the backend-parity tests).
"""

from __future__ import annotations

import os

if os.environ.get("SL2STAR_PURE_PYTHON"):
    from . import _kernel_py as kernel
else:
    try:
        from . import _kernel_cy as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as kernel

BACKEND = kernel.BACKEND_NAME
