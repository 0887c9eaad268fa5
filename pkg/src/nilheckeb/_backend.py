"""Selects the term-arithmetic backend at import time.

The compiled extension is preferred when present; setting
``NILHECKEB_PURE=1`` in the environment forces the pure Python twin.
"""

import os

if os.environ.get("NILHECKEB_PURE") == "1":
    from . import _kernels_py as kernels
else:
    try:
        from . import _termkernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND_NAME
