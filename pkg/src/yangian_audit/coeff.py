"""Exact coefficients: sparse polynomials over Q in the formal parameters.

The parameters are ``hbar``, ``eps`` and ``alpha``; a fourth slot ``s`` is the
summation index of parametric mode families (see :mod:`yangian_audit.ueva`).
The level ``k`` never appears on its own, only through ``alpha = k + n + 2``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from ._kernel import poly_add, poly_mul, poly_scale

VARS = ("hbar", "eps", "alpha", "s")
_NV = len(VARS)
_ZERO_EXP = (0,) * _NV

Scalar = Union[int, Fraction]


class ParamPoly:
    """Immutable sparse polynomial ``{exponent tuple: Fraction}``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        if terms:
            self.terms = {k: v for k, v in terms.items() if v}
        else:
            self.terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "ParamPoly":
        c = Fraction(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "ParamPoly":
        exp = [0] * _NV
        exp[VARS.index(name)] = power
        return cls._raw({tuple(exp): Fraction(1)})

    @staticmethod
    def coerce(x) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return ParamPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ParamPoly")

    # ring operations
    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            other = ParamPoly.const(other)
        elif not isinstance(other, ParamPoly):
            return NotImplemented
        return ParamPoly._raw(poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        elif not isinstance(other, ParamPoly):
            return NotImplemented
        return ParamPoly._raw(poly_add(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return ParamPoly.coerce(other) - self

    def __neg__(self):
        return ParamPoly._raw({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ParamPoly._raw(poly_scale(self.terms, other))
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return ParamPoly._raw(poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_const(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ZERO_EXP in self.terms)

    def const_value(self) -> Fraction:
        """Constant term (the whole value when :meth:`is_const`)."""
        return self.terms.get(_ZERO_EXP, Fraction(0))

    def degree(self, name: str) -> int:
        i = VARS.index(name)
        return max((k[i] for k in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ParamPoly.const(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def substitute(self, bindings: Mapping[str, "ParamPoly | Scalar"]) -> "ParamPoly":
        """Simultaneous substitution ``var -> polynomial``; a ring homomorphism."""
        if not bindings:
            return self
        idx = {VARS.index(name): ParamPoly.coerce(val) for name, val in bindings.items()}
        out = ZERO
        powers: dict = {}
        for exp, c in self.terms.items():
            kept = list(exp)
            term = ParamPoly.const(c)
            for i, val in idx.items():
                e = exp[i]
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = val ** e
                    term = term * powers[key]
                    kept[i] = 0
            term = term * ParamPoly._raw({tuple(kept): Fraction(1)})
            out = out + term
        return out

    def evaluate(self, **values) -> Fraction:
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for name, e in zip(VARS, exp):
                if e:
                    term *= Fraction(values[name]) ** e
            total += term
        return total

    def sort_key(self):
        return tuple(sorted(self.terms.items()))

    def __repr__(self):
        return f"ParamPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        names = {"hbar": "h", "eps": "e", "alpha": "a", "s": "s"}
        parts = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                names[v] + (f"^{e}" if e > 1 else "") for v, e in zip(VARS, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = ParamPoly()
ONE = ParamPoly.const(1)
HBAR = ParamPoly.var("hbar")
EPS = ParamPoly.var("eps")
ALPHA = ParamPoly.var("alpha")
S = ParamPoly.var("s")


def poly_arith(a: ParamPoly, b: ParamPoly, op: str) -> ParamPoly:
    """Dispatch ``add``/``sub``/``mul`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def substitute(p: ParamPoly, bindings) -> ParamPoly:
    return p.substitute(bindings)


def binomial_poly(top: ParamPoly, r: int) -> ParamPoly:
    """``C(top, r)`` as a polynomial in whatever variables ``top`` carries."""
    out = ONE
    for i in range(r):
        out = out * (top - i)
    fact = 1
    for i in range(2, r + 1):
        fact *= i
    return out * Fraction(1, fact)


def falling(top: ParamPoly, k: int) -> ParamPoly:
    out = ONE
    for i in range(k):
        out = out * (top - i)
    return out


def binom(m: int, r: int) -> Fraction:
    """Generalized binomial ``C(m, r)`` for any integer ``m`` and ``r >= 0``."""
    num = 1
    for i in range(r):
        num *= m - i
    den = 1
    for i in range(2, r + 1):
        den *= i
    return Fraction(num, den)
