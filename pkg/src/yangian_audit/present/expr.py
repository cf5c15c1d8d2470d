"""Formal bracket expressions over indexed generator symbols."""
from __future__ import annotations

from dataclasses import dataclass

from ..coeff import ONE, ParamPoly


class Expr:
    __slots__ = ()

    def __add__(self, other: "Expr") -> "Expr":
        return lin((ONE, self), (ONE, other))

    def __sub__(self, other: "Expr") -> "Expr":
        return lin((ONE, self), (-ONE, other))

    def __neg__(self) -> "Expr":
        return lin((-ONE, self))

    def __rmul__(self, c) -> "Expr":
        return lin((ParamPoly.coerce(c), self))

    def __mul__(self, c) -> "Expr":
        return lin((ParamPoly.coerce(c), self))


@dataclass(frozen=True)
class Gen(Expr):
    family: str  # "X+", "X-", "H" (D(2n)) or "x+", "x-", "h"
    index: int
    level: int

    def __str__(self):
        return f"{self.family}_{{{self.index},{self.level}}}"


@dataclass(frozen=True)
class Br(Expr):
    a: Expr
    b: Expr

    def __str__(self):
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True)
class Lin(Expr):
    terms: tuple  # ((ParamPoly, Expr), ...)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for c, e in self.terms:
            if c == ONE:
                parts.append(str(e))
            elif c == -ONE:
                parts.append(f"-{e}")
            else:
                parts.append(f"({c}){e}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Named(Expr):
    """Leaf resolved by the assignment, e.g. ``("Et", (u,))`` for (E11-E22)t^u."""

    name: str
    params: tuple = ()

    def __str__(self):
        return f"{self.name}{list(self.params)}"


@dataclass(frozen=True)
class Scalar(Expr):
    """Scalar multiple of the unit (only meaningful in associative targets)."""

    value: ParamPoly

    def __str__(self):
        return f"({self.value})1"


ZERO_EXPR = Lin(())


def lin(*pairs) -> Expr:
    terms = []
    for c, e in pairs:
        c = ParamPoly.coerce(c)
        if c.is_zero():
            continue
        if isinstance(e, Lin):
            terms.extend((c * c2, e2) for c2, e2 in e.terms)
        else:
            terms.append((c, e))
    return Lin(tuple(terms))


def br(a: Expr, b: Expr) -> Br:
    return Br(a, b)


def nested(*xs: Expr) -> Expr:
    """Right-nested bracket ``[x1,[x2,[...,xk]]]``."""
    out = xs[-1]
    for x in reversed(xs[:-1]):
        out = Br(x, out)
    return out


def generators(e: Expr):
    """All generator leaves of ``e``."""
    if isinstance(e, Gen):
        yield e
    elif isinstance(e, Br):
        yield from generators(e.a)
        yield from generators(e.b)
    elif isinstance(e, Lin):
        for _, x in e.terms:
            yield from generators(x)


def rebracket(e: Expr) -> Expr:
    """Equivalent expression with every bracket written as ``-[b,a]``."""
    if isinstance(e, Br):
        return lin((-ONE, Br(rebracket(e.b), rebracket(e.a))))
    if isinstance(e, Lin):
        return Lin(tuple((c, rebracket(x)) for c, x in e.terms))
    return e


__all__ = ["Expr", "Gen", "Br", "Lin", "Named", "Scalar", "ZERO_EXPR", "lin", "br", "nested",
           "generators", "rebracket"]
