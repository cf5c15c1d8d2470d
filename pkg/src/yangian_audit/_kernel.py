"""Kernel dispatch: compiled Cython kernels when built, pure Python otherwise.

Set ``YANGIAN_AUDIT_PURE=1`` to force the Python path.
"""
import os

if os.environ.get("YANGIAN_AUDIT_PURE"):
    from ._pykernel import BACKEND, lin_add, poly_add, poly_mul, poly_scale
else:
    try:
        from ._ckernel import BACKEND, lin_add, poly_add, poly_mul, poly_scale
    except ImportError:  # extension not built
        from ._pykernel import BACKEND, lin_add, poly_add, poly_mul, poly_scale

__all__ = ["BACKEND", "lin_add", "poly_add", "poly_mul", "poly_scale"]
