# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot polynomial kernels (see ``_pykernel``)."""
from fractions import Fraction


cdef inline object _fmul(object x, object y):
    # integral coefficients dominate; skip the generic Fraction path for them
    if x.denominator == 1 and y.denominator == 1:
        return Fraction(x.numerator * y.numerator)
    return x * y


cpdef dict poly_add(dict a, dict b, int sign=1):
    cdef dict out = dict(a)
    cdef object k, v, c
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


cdef inline tuple _addexp(tuple x, tuple y):
    cdef Py_ssize_t i, m = len(x)
    if m == 4:
        return (<long>x[0] + <long>y[0], <long>x[1] + <long>y[1],
                <long>x[2] + <long>y[2], <long>x[3] + <long>y[3])
    return tuple([<long>x[i] + <long>y[i] for i in range(m)])


cpdef dict poly_mul(dict a, dict b):
    if not a or not b:
        return {}
    cdef dict out = {}
    cdef object va, vb, c
    cdef tuple ka, kb, k
    for ka, va in a.items():
        for kb, vb in b.items():
            k = _addexp(ka, kb)
            c = out.get(k)
            if c is None:
                out[k] = _fmul(va, vb)
            else:
                out[k] = c + _fmul(va, vb)
    return {k: c for k, c in out.items() if c}


cpdef dict poly_scale(dict a, object c):
    if not c:
        return {}
    return {k: _fmul(v, c) for k, v in a.items()}


cpdef dict lin_add(dict acc, dict other, object scale):
    cdef object key, val, term, cur
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


BACKEND = "cython"
