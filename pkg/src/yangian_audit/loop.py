"""gl(N) tensor Q[u^{+-1}, v] with Kassel's central extension by Omega^1/dA.

Elements are stored in matrix-unit coordinates ``E_{i,j} u^r v^s``.  The
centre is kept in the canonical basis

    {u^{-1} v^s du : s >= 0}  union  {u^r v^s dv : r != 0, s >= 0}

and every differential produced by the cocycle is reduced into it.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .coeff import ONE, ZERO, ParamPoly


class TauOnCenterError(ValueError):
    """Raised when the involution is applied to an element with a central part."""

    def __init__(self):
        super().__init__("tau-on-center-undefined")


def _acc(d: dict, key, val: ParamPoly) -> None:
    cur = d.get(key)
    new = val if cur is None else cur + val
    if new.is_zero():
        d.pop(key, None)
    else:
        d[key] = new


class CenterElement:
    """Class in Omega^1(A)/dA written in the canonical basis."""

    __slots__ = ("du", "dv")

    def __init__(self, du=None, dv=None):
        self.du = {k: v for k, v in (du or {}).items() if not v.is_zero()}
        self.dv = {k: v for k, v in (dv or {}).items() if not v.is_zero()}
        for r, _ in self.dv:
            if r == 0:
                raise ValueError("v^s dv is exact; not a canonical basis element")

    def is_zero(self) -> bool:
        return not self.du and not self.dv

    def __add__(self, other: "CenterElement") -> "CenterElement":
        du, dv = dict(self.du), dict(self.dv)
        for k, v in other.du.items():
            _acc(du, k, v)
        for k, v in other.dv.items():
            _acc(dv, k, v)
        return CenterElement(du, dv)

    def scale(self, c) -> "CenterElement":
        c = ParamPoly.coerce(c)
        return CenterElement({k: v * c for k, v in self.du.items()},
                             {k: v * c for k, v in self.dv.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, CenterElement) and self.du == other.du and self.dv == other.dv

    def __repr__(self):
        parts = [f"({c})u^-1 v^{s} du" for s, c in sorted(self.du.items())]
        parts += [f"({c})u^{r} v^{s} dv" for (r, s), c in sorted(self.dv.items())]
        return " + ".join(parts) if parts else "0"


def _reduce_dv(a: int, b: int, c: ParamPoly, du: dict, dv: dict) -> None:
    # u^a v^b dv; v^b dv = d(v^{b+1}/(b+1)) is exact
    if a != 0:
        _acc(dv, (a, b), c)


def _reduce_du(a: int, b: int, c: ParamPoly, du: dict, dv: dict) -> None:
    if a == -1:
        _acc(du, b, c)
        return
    if b == 0:
        return  # u^a du exact
    # d(u^{a+1} v^b) = (a+1) u^a v^b du + b u^{a+1} v^{b-1} dv
    _reduce_dv(a + 1, b - 1, c * Fraction(-b, a + 1), du, dv)


def omega_canonicalize(a: tuple[int, int], d_of: tuple[int, int], coeff=ONE) -> CenterElement:
    """Class of ``coeff * (u^p v^q) d(u^p2 v^q2)`` in the canonical basis."""
    p, q = a
    p2, q2 = d_of
    coeff = ParamPoly.coerce(coeff)
    du: dict = {}
    dv: dict = {}
    if p2:
        _reduce_du(p + p2 - 1, q + q2, coeff * p2, du, dv)
    if q2:
        _reduce_dv(p + p2, q + q2 - 1, coeff * q2, du, dv)
    return CenterElement(du, dv)


class LoopElement:
    """``sum c * E_{i,j} u^r v^s`` plus a central part."""

    __slots__ = ("body", "center")

    def __init__(self, body=None, center: CenterElement | None = None):
        self.body = {k: v for k, v in (body or {}).items() if not v.is_zero()}
        self.center = center if center is not None else CenterElement()

    @classmethod
    def unit(cls, i: int, j: int, r: int = 0, s: int = 0, coeff=ONE) -> "LoopElement":
        return cls({(i, j, r, s): ParamPoly.coerce(coeff)})

    @classmethod
    def central(cls, center: CenterElement) -> "LoopElement":
        return cls({}, center)

    def is_zero(self) -> bool:
        return not self.body and self.center.is_zero()

    def __add__(self, other: "LoopElement") -> "LoopElement":
        body = dict(self.body)
        for k, v in other.body.items():
            _acc(body, k, v)
        return LoopElement(body, self.center + other.center)

    def scale(self, c) -> "LoopElement":
        c = ParamPoly.coerce(c)
        if c.is_zero():
            return LoopElement()
        return LoopElement({k: v * c for k, v in self.body.items()}, self.center.scale(c))

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, LoopElement) and self.body == other.body and self.center == other.center

    def drop_center(self) -> "LoopElement":
        return LoopElement(self.body)

    def trace_free(self) -> bool:
        """True when every (r, s) component of the body is traceless."""
        tr: dict = {}
        for (i, j, r, s), c in self.body.items():
            if i == j:
                _acc(tr, (r, s), c)
        return not tr

    def degrees(self) -> set[tuple[int, int]]:
        return {(r, s) for (_, _, r, s) in self.body}

    def __repr__(self):
        parts = []
        for (i, j, r, s) in sorted(self.body):
            parts.append(f"({self.body[(i, j, r, s)]})E[{i},{j}]u^{r}v^{s}")
        if not self.center.is_zero():
            parts.append(repr(self.center))
        return " + ".join(parts) if parts else "0"


def bracket(x: LoopElement, y: LoopElement, central: bool = True) -> LoopElement:
    """Lie bracket with the Kassel cocycle ``tr(z1 z2) a2 da1``."""
    body: dict = {}
    du: dict = {}
    dv: dict = {}
    for (i, j, r1, s1), c1 in x.body.items():
        for (k, l, r2, s2), c2 in y.body.items():
            if j != k and l != i:
                continue
            c = c1 * c2
            if j == k:
                _acc(body, (i, l, r1 + r2, s1 + s2), c)
            if l == i:
                _acc(body, (k, j, r1 + r2, s1 + s2), -c)
            if central and j == k and l == i:
                # a2 da1 with a1 = u^r1 v^s1, a2 = u^r2 v^s2
                if r1:
                    _reduce_du(r1 + r2 - 1, s1 + s2, c * r1, du, dv)
                if s1:
                    _reduce_dv(r1 + r2, s1 + s2 - 1, c * s1, du, dv)
    return LoopElement(body, CenterElement(du, dv))


def f_elem(i: int, j: int, r: int, s: int, coeff=ONE) -> LoopElement:
    """Twisted basis element ``(E_{i,j} - (-1)^s E_{-j,-i}) u^r v^s``."""
    coeff = ParamPoly.coerce(coeff)
    body: dict = {}
    _acc(body, (i, j, r, s), coeff)
    _acc(body, (-j, -i, r, s), coeff * (-1 if s % 2 == 0 else 1))
    return LoopElement(body)


def tau_apply(x: LoopElement, literal: bool = False) -> LoopElement:
    """The involution ``E_{i,j} u^r v^s -> -(-1)^s E_{-j,-i} u^r v^s``.

    Its fixed points are exactly the ``f_elem`` combinations.  ``literal=True``
    drops the overall minus sign, giving the printed map
    ``(-1)^s E_{-j,-i} u^r v^s``; that map is an anti-automorphism
    (it sends every ``f_elem`` to its negative).
    """
    if not x.center.is_zero():
        raise TauOnCenterError()
    body: dict = {}
    for (i, j, r, s), c in x.body.items():
        sign = 1 if s % 2 == 0 else -1
        if not literal:
            sign = -sign
        _acc(body, (-j, -i, r, s), c * sign)
    return LoopElement(body)


def linear_sum(items: Iterable[tuple[object, LoopElement]]) -> LoopElement:
    out = LoopElement()
    for c, el in items:
        out = out + el.scale(c)
    return out


class LoopModel:
    """Bracket-algebra handle over :class:`LoopElement`.

    ``central=False`` discards cocycle values (the centreless target of pi).
    """

    def __init__(self, central: bool = True, name: str | None = None):
        self.central = central
        self.name = name or ("kassel" if central else "loop")

    def zero(self) -> LoopElement:
        return LoopElement()

    def bracket(self, x: LoopElement, y: LoopElement) -> LoopElement:
        return bracket(x, y, central=self.central)

    @staticmethod
    def add(x: LoopElement, y: LoopElement) -> LoopElement:
        return x + y

    @staticmethod
    def scale(x: LoopElement, c) -> LoopElement:
        return x.scale(c)

    def scalar(self, c) -> LoopElement:
        if ParamPoly.coerce(c).is_zero():
            return LoopElement()
        raise ValueError("the loop algebra has no unit; nonzero scalar constant")

    @staticmethod
    def is_zero(x: LoopElement) -> bool:
        return x.is_zero()

    @staticmethod
    def describe(x: LoopElement) -> str:
        return repr(x)


ZERO_ELEMENT = LoopElement()
__all__ = [
    "CenterElement", "LoopElement", "LoopModel", "TauOnCenterError", "bracket",
    "f_elem", "omega_canonicalize", "tau_apply", "linear_sum", "ZERO", "ZERO_ELEMENT",
]
