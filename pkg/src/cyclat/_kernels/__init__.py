"""Kernel backend selection: compiled extension if available, else pure Python.

Set CYCLAT_PURE=1 to force the pure-Python implementation.
"""

import os

if os.environ.get("CYCLAT_PURE"):
    from .pykernels import bareiss_det, hnf_columns, lattice_reduce

    BACKEND = "python"
else:
    try:
        from ._ckernels import bareiss_det, hnf_columns, lattice_reduce

        BACKEND = "c"
    except ImportError:
        from .pykernels import bareiss_det, hnf_columns, lattice_reduce

        BACKEND = "python"

__all__ = ["bareiss_det", "hnf_columns", "lattice_reduce", "BACKEND"]
