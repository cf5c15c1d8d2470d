"""Exact verification engine for the type-D twisted affine Yangian constructions."""
from ._kernel import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
