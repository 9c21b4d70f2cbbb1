"""Picks the kernel implementation once, at import.

Set ``TRIPARTITE_PPT_PURE_PYTHON=1`` to force the pure-Python kernels even
when the compiled extension is importable.
"""
import os

if os.environ.get("TRIPARTITE_PPT_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = "cython" if kernels.__name__.endswith("_ckernels") else "python"

__all__ = ["BACKEND", "kernels"]
