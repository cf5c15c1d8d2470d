"""The map Phi from the twisted affine Yangian to the completed enveloping
algebra of the rectangular W-algebra, and the completion elements T, A, B, C.

Images live in :class:`~yangian_audit.ueva.modes.LElem` as long as only
brackets are taken; the comparison happens on canonical ModeSums with the
level identification ``alpha = eps``.
"""
from __future__ import annotations

from fractions import Fraction

from ..coeff import ALPHA, EPS, HBAR, ONE, S, ParamPoly
from ..present import ty
from ..present.engine import Assignment
from ..present.expr import Gen
from .modes import Family, LElem, ModeSum, bracket

ALPHA_IS_EPS = {"alpha": EPS}
HALF = ParamPoly.const(Fraction(1, 2))
PHI_N = 4


def _pw(s):
    return (1, 0) if s is None else (0, s)


def _sp(s) -> ParamPoly:
    return S if s is None else ParamPoly.const(s)


def w1(i: int, j: int, power, n: int = PHI_N, c=ONE) -> LElem:
    return LElem.w(1, i, j, power, n, c)


def w2(i: int, j: int, power, n: int = PHI_N, c=ONE) -> LElem:
    return LElem.w(2, i, j, power, n, c)


def phi_image(g: Gen, n: int = PHI_N, x0_minus_power: int = 0,
              variant: str = "literal") -> LElem | None:
    """Image of a ty generator; ``x0_minus_power`` is the t-power of Phi(x^-_{0,1}).

    ``corrected`` flips the sign of the W1 part of Phi(h_{0,0}).
    """
    if not ty.is_generator(g, n):
        return None
    fam, i, r = g.family, g.index, g.level
    if fam == "h":
        if r == 1:
            return (w2(i, i, 1, n) - w2(i + 1, i + 1, 1, n)).scale(-HBAR)
        if 1 <= i <= n - 1:
            return w1(i, i, 0, n) - w1(i + 1, i + 1, 0, n)
        if i == n:
            return w1(n - 1, n - 1, 0, n) + w1(n, n, 0, n)
        sign = -1 if variant == "corrected" else 1
        return (w1(1, 1, 0, n) + w1(2, 2, 0, n)).scale(sign) + LElem.scalar(2 * ALPHA, n)
    plus = fam == "x+"
    if r == 0:
        if 1 <= i <= n - 1:
            return w1(i, i + 1, 0, n) if plus else w1(i + 1, i, 0, n)
        if i == n:
            return w1(n - 1, -n, 0, n) if plus else w1(-n, n - 1, 0, n)
        return w1(-2, 1, 1, n) if plus else w1(1, -2, -1, n)
    if 1 <= i <= n - 1:
        return w2(i, i + 1, 1, n, -HBAR) if plus else w2(i + 1, i, 1, n, -HBAR)
    if i == n:
        return w2(n - 1, -n, 1, n, -HBAR) if plus else w2(-n, n - 1, 1, n, -HBAR)
    return w2(-2, 1, 2, n, HBAR) if plus else w2(1, -2, x0_minus_power, n, HBAR)


def named_image(name: str, params: tuple, n: int = PHI_N) -> LElem | None:
    if name == "f":
        i, j, u = params
        return w1(i, j, u, n)
    if name == "Et":
        (u,) = params
        return w1(1, 1, u, n) - w1(2, 2, u, n)
    return None


class UModel:
    """Bracket model on L(V); zero tests go through the canonical ModeSum."""

    def __init__(self, n: int = PHI_N, bindings: dict | None = None):
        self.n = n
        self.bindings = ALPHA_IS_EPS if bindings is None else bindings

    def bracket(self, a, b):
        return bracket(a, b)

    def add(self, a, b):
        return a + b

    def scale(self, a, c):
        return a.scale(c)

    def zero(self):
        return LElem.zero(self.n)

    def scalar(self, c):
        return LElem.scalar(c, self.n)

    def canon(self, a) -> ModeSum:
        u = a if isinstance(a, ModeSum) else a.to_u()
        return u.substitute(self.bindings)

    def is_zero(self, a) -> bool:
        return self.canon(a).is_zero()

    def describe(self, a) -> str:
        return self.canon(a).describe()


def phi_assignment(n: int = PHI_N, x0_minus_power: int = 0, variant: str = "literal") -> Assignment:
    return Assignment("Phi", UModel(n), lambda g: phi_image(g, n, x0_minus_power, variant),
                      lambda name, params: named_image(name, params, n))


# T^s ----------------------------------------------------------------------------

class UncoveredIndex(ValueError):
    pass


def t_claim(i: int, j: int, s, n: int = PHI_N) -> LElem:
    """The closed image ``-hbar W2_{i,j} t^(s+1)``."""
    b, c = _pw(s)
    return w2(i, j, (b, c + 1), n, -HBAR)


def t_elem(i: int, j: int, s, n: int = PHI_N, variant: str = "literal") -> LElem:
    """``Phi(T^s_{i,j})``; ``s=None`` keeps ``s`` symbolic.

    ``literal`` evaluates the defining brackets row by row as printed (the
    ``T_{-i,j}``, ``j > i+1`` row brackets with ``f_{i,j}``, the negative-index
    rule refers to ``T_{-i,-j}``).  ``corrected`` is the closed image
    :func:`t_claim`.
    """
    if i == j or i == -j:
        raise UncoveredIndex(f"T_{{{i},{j}}} is not defined on its own")
    if variant == "corrected":
        return t_claim(i, j, s, n)
    if variant != "literal":
        raise ValueError(f"unknown variant {variant!r}")
    pw, sp = _pw(s), _sp(s)

    def f(a, b, c=ONE):
        return w1(a, b, pw, n, c)

    def h(a):
        return phi_image(ty.h(a, 1), n)

    if i > 0 and j > 0:
        if i < j:
            if j == i + 1:
                return bracket(h(i), f(i, j)).scale(HALF) - f(i, j, HBAR * EPS * sp * HALF)
            return bracket(h(i), f(i, j)) - f(i, j, HBAR * sp)
        lo = j
        if i == lo + 1:
            return bracket(h(lo), f(i, j)).scale(HALF) + f(i, j, HBAR * EPS * sp * ALPHA * HALF)
        return bracket(h(lo), f(i, j)) + f(i, j, HBAR * sp * (ALPHA - 1))
    if i > 0 > j:
        a, b = i, -j
        if a > b:
            return t_elem(b, -a, s, n, variant) + f(i, j, (sp + 1) * (ALPHA + 1))
        if b == a + 1:
            return bracket(h(a), f(a, -b)).scale(HALF) + f(a, -a - 1, HBAR * (sp + 1) * (EPS + 1) * HALF)
        return bracket(h(a), f(a, -b)) - f(a, -b, HBAR * sp)
    if i < 0 < j:
        a, b = -i, j
        if a > b:
            return t_elem(-b, a, s, n, variant) + f(i, j, (sp + 1) * (ALPHA + 1))
        if b == a + 1:
            return bracket(h(a), f(-a, b)).scale(HALF) + f(-a - 1, a, HBAR * (sp + 1) * (EPS + 1) * HALF)
        return bracket(h(a), f(a, b)) - f(-a, b, HBAR * sp * (EPS - 1))
    return t_elem(-i, -j, s, n, variant) + f(i, j, (sp + 1) * (ALPHA + 1))



def t_diff(i: int, j: int, s, n: int = PHI_N, variant: str = "literal") -> LElem:
    """``T^s_{i,i} - T^s_{j,j} := [T^s_{i,j}, f_{j,i}]``."""
    return bracket(t_elem(i, j, s, n, variant), w1(j, i, 0, n))


# completion elements ------------------------------------------------------------

def _fam(c, left, right):
    return Family(ParamPoly.coerce(c), left, right)


def _sym_pair(c, left, right):
    """``sum_{s>=0} c (left t^{-s} right^{s} + right^{-s-1} left t^{s+1})`` for a
    mode ``left`` and an s-dependent ``right``."""
    return [_fam(c, left((-1, 0)), right), _fam(c, right.reindex(-1, -1), left((1, 1)))]


def a_elem(i: int, j: int, n: int = PHI_N, variant: str = "literal") -> ModeSum:
    """Image of ``A_{i,j}``.

    ``literal`` uses the printed T rows and the printed last term
    ``-2(eps+1) f_{i,i}``; ``corrected`` uses the closed T images and
    ``-2 hbar^2 (eps+1) f_{i,i}``; ``derived`` is ``corrected`` with the linear
    tail replaced by ``-hbar^2 eps f_{j,j}`` (``i != j``), the value forced by
    ``[W2_{i,i}t, W2_{j,j}t]``.
    """
    f = lambda a, b: (lambda pw: w1(a, b, pw, n))  # noqa: E731
    tv = "corrected" if variant == "derived" else variant
    T = lambda a, b: t_elem(a, b, None, n, tv)  # noqa: E731
    H2 = HBAR * HBAR
    pieces: list = []
    if i != j:
        pieces.append(t_diff(i, j, 0, n, tv).scale(-2 * HBAR))
        pieces += _sym_pair(HBAR, f(i, j), T(j, i))
        pieces += _sym_pair(-HBAR, f(j, i), T(i, j))
        pieces += _sym_pair(HBAR, f(i, -j), T(-j, i))
        pieces += _sym_pair(HBAR, f(-i, j), T(j, -i))
    pieces.append(_fam(-H2 * EPS * (S + 1), w1(i, j, (-1, -1), n), w1(j, i, (1, 1), n)))
    pieces.append(_fam(H2 * EPS * S, w1(j, i, (-1, 0), n), w1(i, j, (1, 0), n)))
    if i != j:
        pieces.append(_fam(-H2 * EPS, w1(i, -j, (-1, -1), n), w1(-j, i, (1, 1), n)))
        pieces.append(_fam(-H2 * EPS, w1(-j, i, (-1, 0), n), w1(i, -j, (1, 0), n)))
    if variant == "derived":
        if i != j:
            pieces.append(w1(j, j, 0, n, -H2 * EPS))
    else:
        last = 2 * (EPS + 1) * (H2 if variant == "corrected" else ONE)
        pieces.append(w1(j, j, 0, n, 2 * H2 * (EPS + 1)))
        pieces.append(w1(i, i, 0, n, -last))
    return ModeSum.build(pieces, n)


def _fd(i, j, n):
    return lambda pw: w1(i, i, pw, n) - w1(j, j, pw, n)


def b_elem(i: int, j: int, n: int = PHI_N, variant: str = "literal") -> ModeSum:
    """Image of ``B_{i,j}``; the garbled ``T^{-s}_{i,j}t^{1-s}(f_{i,i}-f_{j,j})t^s``
    is read as ``T^{-s}_{i,j}(f_{i,i}-f_{j,j})t^s``."""
    H2 = HBAR * HBAR
    fij = lambda pw: w1(i, j, pw, n)  # noqa: E731
    fd = _fd(i, j, n)
    D = t_diff(i, j, None, n, variant)
    T = t_elem(i, j, None, n, variant)
    pieces = [fij(0).scale(2 * H2 * EPS), t_elem(i, j, 0, n, variant).scale(-2 * HBAR * EPS),
              _fam(2 * HBAR, fij((-1, -1)), D.reindex(1, 1)),
              _fam(2 * HBAR, D.reindex(-1, 0), fij((1, 0))),
              _fam(2 * HBAR, fd((-1, -1)), T.reindex(1, 1)),
              _fam(2 * HBAR, T.reindex(-1, 0), fd((1, 0))),
              _fam(-2 * H2 * (S + 2), fij((-1, -1)), fd((1, 1))),
              _fam(-2 * H2 * (1 - S), fd((-1, 0)), fij((1, 0))),
              _fam(-2 * H2 * (S + 2), fd((-1, -1)), fij((1, 1))),
              _fam(-2 * H2 * (1 - S), fij((-1, 0)), fd((1, 0)))]
    return ModeSum.build(pieces, n)


def c_elem(i: int, j: int, n: int = PHI_N) -> ModeSum:
    H2 = HBAR * HBAR
    fij = lambda pw: w1(i, j, pw, n)  # noqa: E731
    fd = _fd(i, j, n)
    c = 2 * (2 - EPS) * H2
    return ModeSum.build([fij(0).scale((4 - EPS * EPS) * H2),
                          _fam(c, fij((-1, -1)), fd((1, 1))),
                          _fam(c, fd((-1, 0)), fij((1, 0)))], n)


def abc_elem(kind: str, i: int, j: int, n: int = PHI_N, variant: str = "literal") -> ModeSum:
    """``A``, ``B`` or ``C`` at ``(i, j)``."""
    if kind == "A":
        return a_elem(i, j, n, variant)
    if kind == "B":
        return b_elem(i, j, n, "corrected" if variant == "derived" else variant)
    if kind == "C":
        return c_elem(i, j, n)
    raise ValueError(f"unknown element kind {kind!r}")
