"""Affine vertex superalgebra V^kappa(a), the differential d0 and the W-algebra
generators of the rectangular W-algebra of sp(4n)."""
from .core import *  # noqa: F401,F403
from .core import __all__ as _core
from .ope import *  # noqa: F401,F403
from .ope import __all__ as _ope

__all__ = list(_core) + list(_ope)
