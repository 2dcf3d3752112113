"""Kernel backend selection.

The compiled extension is preferred when importable; the NumPy fallback is
used otherwise, or when the ``MERTMAT_PURE`` environment variable is set to
a non-empty value other than ``0``.
"""

import os

if os.environ.get("MERTMAT_PURE", "0") not in ("", "0"):
    from . import _pure as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as kernels  # type: ignore[no-redef]

BACKEND = "compiled" if kernels.COMPILED else "pure"
