"""Select the compiled kernel module, falling back to pure Python.

Set ``GALSTRUVE_PURE_PYTHON=1`` to force the fallback (useful for timing
comparisons and for debugging the compiled twin).
"""

from __future__ import annotations

import os

if os.environ.get("GALSTRUVE_PURE_PYTHON") == "1":
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as kernels


def backend_name() -> str:
    """Name of the active kernel implementation: 'compiled' or 'python'."""
    return "compiled" if kernels.NAME == "c" else "python"
