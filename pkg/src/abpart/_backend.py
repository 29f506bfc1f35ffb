"""Kernel selection.

The compiled extension is used when it imports; ``ABPART_PURE=1`` in the
environment forces the pure-Python kernels.
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("ABPART_PURE", "") not in ("", "0"):
    kernels = _kernels_py
    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        kernels = _kernels_py
        COMPILED = False

BACKEND = "cython" if COMPILED else "python"

peel = kernels.peel
first_feasible_split = kernels.first_feasible_split
