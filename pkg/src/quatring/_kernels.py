"""Kernel selection: compiled extension if built, else pure Python.

Set ``QUATRING_PURE=1`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("QUATRING_PURE") != "1":
    try:
        from ._ckernels import convolve, hnf_rows
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import convolve, hnf_rows

__all__ = ["BACKEND", "convolve", "hnf_rows"]
