"""Mode calculus for the rectangular W-algebra.

Two layers.  :class:`LElem` is an element of the Borcherds Lie algebra
``L(V)``: a finite sum of states times ``t``-powers, where a power may be
affine in the family variable ``s``.  Brackets there are exact nth-product
computations.  :class:`ModeSum` is the image in the completed enveloping
algebra, written in the generator modes ``W1_c t^m`` and ``W2_c t^m`` of the
canonical index pairs ``c``.  Every state is first rewritten as a polynomial in
the symbols ``d^k W / k!`` (leading-symbol peeling), composite modes are
expanded by the normal-ordering rule and two-factor words are normal ordered.

Canonical form of a ModeSum:

* a scalar (the image of ``|0>t^{-1}``);
* linear terms ``W t^m``;
* finite words ``X t^a Y t^b`` with ``b > a``, or ``b == a`` and ``X <= Y``;
* families ``sum_{m >= M} P(m) X t^{E-m} Y t^m`` with ``M = E//2 + 1`` and
  ``P`` a polynomial in the slot ``s`` (standing for ``m``).

A function of ``m`` that is eventually polynomial splits uniquely into a
polynomial and a finitely supported part, so equality of canonical forms is
equality in the completion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .._kernel import lin_add
from ..coeff import ONE, S, ZERO, ParamPoly, binomial_poly
from ..vertex.core import (
    VAState, W, _canon_pair, algebra, nth_product, translate,
)

GEN_KINDS = ("W1", "W2")


class NotInW(ValueError):
    """The state has a leading term that no W-monomial can produce."""


class UnsupportedPattern(ValueError):
    """A family whose exponents do not run against each other, or a cubic mode."""


# generators and symbols -------------------------------------------------------

def canonical_gen(order: int, i: int, j: int) -> tuple:
    """``(("W1"|"W2", a, b), sign)`` for the basis generator behind ``W_{i,j}``.

    Only the sign of ``W1`` is recorded; ``W2`` of a non-canonical pair differs
    from the canonical one by a derivative, which :func:`decompose` finds.
    """
    c = _canon_pair(i, j)
    if order == 1:
        if i == -j:
            return None, 0
        return ("W1", *c), (1 if (i, j) == c else -1)
    return ("W2", *c), 1


def gen_state(n: int, gen: tuple) -> VAState:
    kind, a, b = gen
    return W(1 if kind == "W1" else 2, a, b, n)


@lru_cache(maxsize=None)
def symbol_state(n: int, sym: tuple) -> VAState:
    """``d^k W_c / k!`` for ``sym = (kind, a, b, k)``."""
    kind, a, b, k = sym
    st = gen_state(n, (kind, a, b))
    if k:
        st = translate(st, k).scale(Fraction(1, factorial(k)))
    return st


@lru_cache(maxsize=None)
def monomial_state(n: int, syms: tuple) -> VAState:
    """Right-nested normally ordered product of sorted symbols."""
    if not syms:
        return VAState.vacuum(algebra(n))
    st = symbol_state(n, syms[-1])
    for sym in reversed(syms[:-1]):
        st = nth_product(symbol_state(n, sym), -1, st)
    return st


def _symbol(alg, g: int, depth: int):
    kind, a, b = alg.gens[g]
    if kind == "G":
        return ("W2", a, b, depth - 1)
    if kind == "E" and a != -b and (a, b) == _canon_pair(a, b):
        return ("W1", a, b, depth - 1)
    return None


def _cls(alg, mono):
    return (sum(alg.gens[g][0] == "G" for g, _ in mono), len(mono))


def decompose(state: VAState) -> dict:
    """Write a W-algebra state as ``{sorted symbol tuple: coeff}``.

    The empty tuple is the vacuum.  Raises :class:`NotInW` if some leading
    term cannot be matched.
    """
    alg = state.alg
    if not alg.trace:
        raise ValueError("mode calculus runs at the corrected level")
    rest = dict(state.terms)
    out: dict = {}
    while rest:
        top = max(_cls(alg, m) for m in rest)
        best = None
        for m in rest:
            if _cls(alg, m) != top:
                continue
            syms = [_symbol(alg, g, d) for g, d in m]
            if None in syms:
                continue
            if best is None or m > best[0]:
                best = (m, tuple(sorted(syms)))
        if best is None:
            bad = max(m for m in rest if _cls(alg, m) == top)
            raise NotInW(f"no W-monomial with leading term {bad}")
        mono, syms = best
        st = monomial_state(alg.n, syms)
        lead = st.terms[mono]
        c = rest[mono] * Fraction(1, lead.const_value())
        lin_add(rest, st.terms, -c)
        rest = {k: v for k, v in rest.items() if not v.is_zero()}
        out[syms] = out.get(syms, ZERO) + c
    return {k: v for k, v in out.items() if not v.is_zero()}


def linear_symbols(state: VAState) -> dict:
    """:func:`decompose` restricted to states of polynomial degree <= 1."""
    dec = decompose(state)
    for syms in dec:
        if len(syms) > 1:
            raise UnsupportedPattern(f"state is not linear in the generators: {syms}")
    return {(syms[0] if syms else None): c for syms, c in dec.items()}


# powers -------------------------------------------------------------------------

def _pw(p) -> tuple:
    """Normalize a power to ``(b, c)`` meaning ``b*s + c``."""
    if isinstance(p, tuple):
        return p
    return (0, int(p))


def _pw_poly(p: tuple) -> ParamPoly:
    b, c = p
    return S * b + c


def _conformal(state: VAState) -> int:
    alg = state.alg
    return max((sum(d + (alg.gens[g][0] != "E") for g, d in m) for m in state.terms), default=0)


# L(V) ---------------------------------------------------------------------------

class LElem:
    """``sum state * t^(b*s + c)``; keys are ``(b, c)``.

    Coefficients of the states may carry the family variable ``s``.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def mode(cls, state: VAState, power) -> "LElem":
        return cls(state.n, {_pw(power): state})

    @classmethod
    def w(cls, order: int, i: int, j: int, power, n: int, coeff=ONE) -> "LElem":
        return cls(n, {_pw(power): W(order, i, j, n).scale(coeff)})

    @classmethod
    def scalar(cls, c, n: int) -> "LElem":
        return cls(n, {(0, -1): VAState.vacuum(algebra(n)).scale(c)})

    @classmethod
    def zero(cls, n: int) -> "LElem":
        return cls(n)

    def __add__(self, other: "LElem") -> "LElem":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return LElem(self.n, out)

    def __sub__(self, other: "LElem") -> "LElem":
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "LElem":
        c = ParamPoly.coerce(c)
        return LElem(self.n, {k: v.scale(c) for k, v in self.terms.items()})

    def reindex(self, b: int, c: int) -> "LElem":
        """Substitute ``s -> b*s + c`` in powers and coefficients."""
        sub = {"s": S * b + c}
        out: dict = {}
        for (pb, pc), st in self.terms.items():
            key = (pb * b, pb * c + pc)
            st2 = VAState(st.alg, {m: v.substitute(sub) for m, v in st.terms.items()})
            out[key] = out[key] + st2 if key in out else st2
        return LElem(self.n, out)

    def at(self, s: int) -> "LElem":
        return self.reindex(0, s)

    def is_symbolic(self) -> bool:
        return any(b for b, _ in self.terms) or any(
            v.degree("s") for st in self.terms.values() for v in st.terms.values())

    def to_u(self) -> "ModeSum":
        return ModeSum.build([self])

    def is_zero(self) -> bool:
        return self.to_u().is_zero()

    def describe(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"[{st.describe()}]t^({_pw_poly(k)})" for k, st in sorted(self.terms.items()))

    __repr__ = describe


def bracket(x: LElem, y: LElem) -> LElem:
    """``[u t^a, v t^b] = sum_r C(a, r) (u_(r) v) t^(a+b-r)``."""
    out: dict = {}
    for pa, u in x.terms.items():
        top = _pw_poly(pa)
        cu = _conformal(u)
        for pb, v in y.terms.items():
            for r in range(cu + _conformal(v)):
                c = binomial_poly(top, r)
                if c.is_zero():
                    continue
                st = nth_product(u, r, v)
                if st.is_zero():
                    continue
                key = (pa[0] + pb[0], pa[1] + pb[1] - r)
                st = st.scale(c)
                out[key] = out[key] + st if key in out else st
    return LElem(x.n, out)


def borcherds_bracket(a: "Mode", b: "Mode") -> "ModeSum":
    return bracket(a.lelem(), b.lelem()).to_u()


# the completed enveloping algebra ----------------------------------------------

@dataclass(frozen=True)
class Mode:
    """``state t^power``."""

    state: VAState
    power: int

    def lelem(self) -> LElem:
        return LElem.mode(self.state, self.power)

    def to_u(self) -> "ModeSum":
        return self.lelem().to_u()


@dataclass(frozen=True)
class Family:
    """``sum_{s >= start} coeff(s) * left(s) * right(s)``.

    ``left`` and ``right`` are :class:`LElem` whose powers are affine in ``s``;
    the left exponents must decrease and the right ones increase.
    """

    coeff: ParamPoly
    left: LElem
    right: LElem
    start: int = 0


@dataclass(frozen=True)
class Word:
    """``coeff * m1 * m2`` for two concrete-power L(V) elements."""

    coeff: ParamPoly
    left: LElem
    right: LElem


def _fam_start(E: int) -> int:
    return E // 2 + 1


def _describe_gen(g) -> str:
    kind, a, b = g
    return f"{kind}[{a},{b}]"


class ModeSum:
    """Canonical element of the completed enveloping algebra (see module doc)."""

    __slots__ = ("n", "scalar", "lin", "words", "fams")

    def __init__(self, n: int):
        self.n = n
        self.scalar = ZERO
        self.lin: dict = {}
        self.words: dict = {}
        self.fams: dict = {}

    # construction --------------------------------------------------------------
    @classmethod
    def build(cls, pieces, n: int | None = None) -> "ModeSum":
        """Canonicalize a list of LElem / Mode / Word / Family / ModeSum pieces."""
        pieces = list(pieces)
        if n is None:
            n = next(_piece_n(p) for p in pieces) if pieces else 4
        acc = cls(n)
        for p in pieces:
            acc._add_piece(p, ONE)
        return acc._clean()

    def _add_piece(self, p, c):
        if isinstance(p, ModeSum):
            self._merge(p, c)
        elif isinstance(p, Mode):
            self._add_lelem(p.lelem(), c)
        elif isinstance(p, LElem):
            self._add_lelem(p, c)
        elif isinstance(p, Word):
            self._add_pair(p.left, p.right, c * p.coeff, None)
        elif isinstance(p, Family):
            self._add_pair(p.left, p.right, c * p.coeff, p.start)
        else:
            raise TypeError(f"not a mode piece: {p!r}")

    def _merge(self, other: "ModeSum", c):
        self.scalar = self.scalar + other.scalar * c
        for d_self, d_other in ((self.lin, other.lin), (self.words, other.words),
                                (self.fams, other.fams)):
            for k, v in d_other.items():
                d_self[k] = d_self.get(k, ZERO) + v * c

    def _add_lelem(self, x: LElem, c):
        for (b, p), st in x.terms.items():
            if b or any(v.degree("s") for v in st.terms.values()):
                raise UnsupportedPattern("a single mode with a symbolic power")
            for syms, k in decompose(st).items():
                self._add_symbols(syms, p, k * c)

    def _add_symbols(self, syms: tuple, p: int, c):
        if not syms:
            if p == -1:
                self.scalar = self.scalar + c
        elif len(syms) == 1:
            self._add_factor_lin(syms[0], p, c)
        elif len(syms) == 2:
            self._add_normal_product(syms[0], syms[1], p, c)
        else:
            raise UnsupportedPattern(f"normally ordered product of {len(syms)} generators")

    def _add_factor_lin(self, sym, p: int, c):
        kind, a, b, k = sym
        coef = binomial_poly(ParamPoly.const(p), k) * ((-1) ** k)
        if not coef.is_zero():
            key = ((kind, a, b), p - k)
            self.lin[key] = self.lin.get(key, ZERO) + coef * c

    def _add_normal_product(self, A, B, p: int, c):
        """``(A_(-1) B) t^p = sum_i (A t^(-1-i) B t^(p+i) + B t^(p-1-i) A t^i)``."""
        self._add_family_sym(ONE * c, A, (-1, -1), B, (1, p), 0)
        self._add_family_sym(ONE * c, B, (-1, p - 1), A, (1, 0), 0)

    def _add_pair(self, left: LElem, right: LElem, c, start):
        """Word (``start is None``) or family of two linear L(V) elements."""
        for pl, sl in left.terms.items():
            dl = linear_symbols(sl)
            for pr, sr in right.terms.items():
                dr = linear_symbols(sr)
                for a, ca in dl.items():
                    for b, cb in dr.items():
                        coef = c * ca * cb
                        if start is None:
                            if pl[0] or pr[0]:
                                raise UnsupportedPattern("a finite word with a symbolic power")
                            self._add_word_sym(a, pl[1], b, pr[1], coef)
                        else:
                            self._add_family_sym(coef, a, pl, b, pr, start)

    # symbol-level families and words --------------------------------------------
    def _add_word_sym(self, a, pa: int, b, pb: int, c):
        """``a t^pa * b t^pb`` where ``a``/``b`` are symbols or ``None`` (vacuum)."""
        if c.is_zero():
            return
        if a is None:
            if pa == -1:
                if b is None:
                    if pb == -1:
                        self.scalar = self.scalar + c
                else:
                    self._add_factor_lin(b, pb, c)
            return
        if b is None:
            if pb == -1:
                self._add_factor_lin(a, pa, c)
            return
        ka, kb = a[3], b[3]
        ca = binomial_poly(ParamPoly.const(pa), ka) * ((-1) ** ka)
        cb = binomial_poly(ParamPoly.const(pb), kb) * ((-1) ** kb)
        coef = c * ca * cb
        if not coef.is_zero():
            self._add_word(a[:3], pa - ka, b[:3], pb - kb, coef)

    def _add_family_sym(self, c, a, pa: tuple, b, pb: tuple, start: int):
        """``sum_{s >= start} c(s) a t^(pa(s)) b t^(pb(s))`` for affine powers."""
        if c.is_zero():
            return
        if a is None or b is None:
            self._add_family_vacuum(c, a, pa, b, pb, start)
            return
        (ba, ca_), (bb, cb_) = pa, pb
        if (ba, bb) != (-1, 1):
            raise UnsupportedPattern(f"family exponents ({ba}s, {bb}s): left must decrease")
        ka, kb = a[3], b[3]
        da = binomial_poly(S * ba + ca_, ka) * ((-1) ** ka)
        db = binomial_poly(S * bb + cb_, kb) * ((-1) ** kb)
        # right exponent m = s + cb_ - kb, so s = m - (cb_ - kb)
        off = cb_ - kb
        poly = (c * da * db).substitute({"s": S - off})
        E = ca_ - ka + off
        self._add_family(a[:3], b[:3], E, start + off, poly)

    def _add_family_vacuum(self, c, a, pa, b, pb, start):
        for sym, p, other, q in ((a, pa, b, pb), (b, pb, a, pa)):
            if sym is not None:
                continue
            bb, cc = p
            if bb == 0:
                raise UnsupportedPattern("vacuum factor with a constant power inside a family")
            num = -1 - cc
            if num % bb:
                return
            s0 = num // bb
            if s0 < start:
                return
            val = c.substitute({"s": s0})
            q0 = q[0] * s0 + q[1]
            if other is None:
                self._add_word_sym(None, -1, None, q0, val)
            else:
                self._add_factor_lin(other, q0, val)
            return

    def _add_family(self, X, Y, E: int, start: int, poly: ParamPoly):
        M = _fam_start(E)
        for m in range(start, M):
            self._add_word(X, E - m, Y, m, poly.substitute({"s": m}))
        for m in range(M, start):
            self._add_word(X, E - m, Y, m, -poly.substitute({"s": m}))
        key = (X, Y, E)
        self.fams[key] = self.fams.get(key, ZERO) + poly

    def _add_word(self, X, p: int, Y, q: int, c):
        if c.is_zero():
            return
        if q > p or (q == p and X <= Y):
            key = (X, p, Y, q)
            self.words[key] = self.words.get(key, ZERO) + c
            return
        key = (Y, q, X, p)
        self.words[key] = self.words.get(key, ZERO) + c
        self._merge(gen_bracket(self.n, X, p, Y, q), c)

    def _clean(self) -> "ModeSum":
        for d in (self.lin, self.words, self.fams):
            for k in [k for k, v in d.items() if v.is_zero()]:
                del d[k]
        return self

    # algebra --------------------------------------------------------------------
    def copy(self) -> "ModeSum":
        out = ModeSum(self.n)
        out._merge(self, ONE)
        return out._clean()

    def __add__(self, other: "ModeSum") -> "ModeSum":
        out = self.copy()
        out._merge(other, ONE)
        return out._clean()

    def __sub__(self, other: "ModeSum") -> "ModeSum":
        out = self.copy()
        out._merge(other, -ONE)
        return out._clean()

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "ModeSum":
        out = ModeSum(self.n)
        out._merge(self, ParamPoly.coerce(c))
        return out._clean()

    def substitute(self, bindings) -> "ModeSum":
        """Apply a parameter substitution to every coefficient (not ``s``)."""
        out = ModeSum(self.n)
        out.scalar = self.scalar.substitute(bindings)
        for name in ("lin", "words", "fams"):
            setattr(out, name, {k: v.substitute(bindings) for k, v in getattr(self, name).items()})
        return out._clean()

    def is_zero(self) -> bool:
        return self.scalar.is_zero() and not self.lin and not self.words and not self.fams

    def __eq__(self, other):
        if not isinstance(other, ModeSum):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def truncate(self, N: int) -> "ModeSum":
        """Expand families into words with right exponent ``<= N`` and drop the rest."""
        out = ModeSum(self.n)
        out.scalar = self.scalar
        out.lin = dict(self.lin)
        out.words = {k: v for k, v in self.words.items() if k[3] <= N}
        for (X, Y, E), poly in self.fams.items():
            for m in range(_fam_start(E), N + 1):
                key = (X, E - m, Y, m)
                out.words[key] = out.words.get(key, ZERO) + poly.substitute({"s": m})
        return out._clean()

    def pieces(self) -> list:
        """Canonical pieces as :class:`Word`/:class:`Family` objects plus linear parts."""
        n = self.n
        out: list = []
        if not self.scalar.is_zero():
            out.append(LElem.scalar(self.scalar, n))
        for (g, p), c in self.lin.items():
            out.append(LElem.mode(gen_state(n, g).scale(c), p))
        for (X, p, Y, q), c in self.words.items():
            out.append(Word(c, LElem.mode(gen_state(n, X), p), LElem.mode(gen_state(n, Y), q)))
        for (X, Y, E), poly in self.fams.items():
            M = _fam_start(E)
            out.append(Family(poly.substitute({"s": S + M}),
                              LElem.mode(gen_state(n, X), (-1, E - M)),
                              LElem.mode(gen_state(n, Y), (1, M))))
        return out

    def describe(self) -> str:
        parts = []
        if not self.scalar.is_zero():
            parts.append(f"({self.scalar})")
        for (g, p), c in sorted(self.lin.items()):
            parts.append(f"({c}){_describe_gen(g)}t^{p}")
        for (X, p, Y, q), c in sorted(self.words.items()):
            parts.append(f"({c}){_describe_gen(X)}t^{p}{_describe_gen(Y)}t^{q}")
        for (X, Y, E), poly in sorted(self.fams.items()):
            M = _fam_start(E)
            parts.append(f"sum_(s>={M})({poly}){_describe_gen(X)}t^({E}-s){_describe_gen(Y)}t^s")
        return " + ".join(parts) if parts else "0"

    __repr__ = describe
    __str__ = describe


def _piece_n(p) -> int:
    if isinstance(p, (ModeSum, LElem)):
        return p.n
    if isinstance(p, Mode):
        return p.state.n
    return p.left.n


@lru_cache(maxsize=None)
def gen_bracket(n: int, X: tuple, p: int, Y: tuple, q: int) -> ModeSum:
    """``[X t^p, Y t^q]`` for basis generators, canonicalized."""
    return bracket(LElem.mode(gen_state(n, X), p), LElem.mode(gen_state(n, Y), q)).to_u()


def canonicalize(x) -> ModeSum:
    """Rebuild ``x`` (a ModeSum or a list of pieces) through the canonicalizer."""
    if isinstance(x, ModeSum):
        return ModeSum.build(x.pieces(), x.n)
    return ModeSum.build(x)


def rewrite_241(a: VAState, m: int, b: VAState, power: int) -> ModeSum:
    """``(a_(m) b) t^power`` expanded by the normal-ordering rule, ``m < 0``.

    ``sum_i C(m,i)(-1)^i (a t^(m-i) b t^(power+i) - (-1)^m b t^(m+power-i) a t^i)``;
    ``a`` and ``b`` must be linear in the generators.
    """
    if m >= 0:
        raise ValueError("rewrite_241 needs a negative product; use borcherds_bracket")
    n = a.n
    w = binomial_poly(S - m - 1, -m - 1)  # C(m,i)(-1)^i as a polynomial in i
    sign = -1 if m % 2 == 0 else 1
    acc = ModeSum(n)
    acc._add_pair(LElem.mode(a, (-1, m)), LElem.mode(b, (1, power)), w, 0)
    acc._add_pair(LElem.mode(b, (-1, m + power)), LElem.mode(a, (1, 0)), w * sign, 0)
    return acc._clean()


__all__ = [
    "GEN_KINDS", "NotInW", "UnsupportedPattern", "canonical_gen", "gen_state", "symbol_state",
    "monomial_state", "decompose", "linear_symbols", "LElem", "bracket", "borcherds_bracket",
    "Mode", "Family", "Word", "ModeSum", "gen_bracket", "canonicalize", "rewrite_241",
]
