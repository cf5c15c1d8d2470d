"""Pure-Python reference versions of the hot polynomial kernels.

The compiled module ``_ckernel`` (built from ``_ckernel.pyx``) exposes the same
functions; :mod:`yangian_audit._kernel` picks whichever is importable.
"""
from fractions import Fraction


def poly_add(a, b, sign=1):
    """Return ``a + sign*b`` for term dicts ``{exponents: Fraction}``."""
    out = dict(a)
    for k, v in b.items():
        c = out.get(k)
        if c is None:
            out[k] = v if sign == 1 else -v
        else:
            c = c + v if sign == 1 else c - v
            if c:
                out[k] = c
            else:
                del out[k]
    return out


def poly_mul(a, b):
    if not a or not b:
        return {}
    out = {}
    get = out.get
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple([x + y for x, y in zip(ka, kb)])
            c = get(k)
            if c is None:
                out[k] = va * vb
            else:
                out[k] = c + va * vb
    return {k: v for k, v in out.items() if v}


def poly_scale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def lin_add(acc, other, scale):
    """In-place ``acc += scale * other`` for dicts of ``key -> ParamPoly``."""
    for key, val in other.items():
        term = val * scale
        cur = acc.get(key)
        if cur is not None:
            term = cur + term
        if term.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = term
    return acc


BACKEND = "python"
ONE = Fraction(1)
