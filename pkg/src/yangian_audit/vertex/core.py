"""The universal affine vertex superalgebra V^kappa(a) behind the rectangular
W-algebra of sp(4n), its n-th products, the differential d0 and the
generators W1, W2.

Index model.  gl(4n) indices are pairs ``CompIndex(column, row)`` with
``column`` in {1, 2} and ``row`` in I_n = {+-1, ..., +-n}; the printed labels
are ``n+i <-> (2, i)`` and ``-n+i <-> (1, i)``.  Negation is
``(c, a) -> (3-c, -a)`` and the parity ``p`` is 0 on column 2, 1 on column 1.

Every element of ``a = g_0 + g_{-2} + psi`` is written in three families of
canonical generators:

* ``E(a,b) = F_{(2,a),(2,b)}``; since ``F_{(1,a),(1,b)} = -E(-b,-a)`` these
  span g_0, which is gl(2n) with
  ``kappa(E_ab, E_cd) = alpha d_ad d_bc + t d_ab d_cd``;
* ``G(a,b) = F_{(2,a),(1,b)} = G(-b,-a)`` spanning g_{-2};
* ``P(a,b) = psi_{(2,a),(1,b)} = P(-b,-a)``, odd, a copy of g_{-2} as a
  g_0-module on which g_{-2} acts trivially.

The trace coefficient ``t`` is 1 by default.  With ``t = 0`` (the bare
matrix-index form of kappa) d0 fails to be a derivation of the 1-product,
e.g. ``E(c,c)_{(1)} d0(G(a,b)) = 2 psi(a,b)``, so the W-algebra would not be
closed under products.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .._kernel import lin_add
from ..coeff import ALPHA, ONE, ParamPoly


def index_set(n: int) -> list:
    return [i for i in range(-n, n + 1) if i]


@dataclass(frozen=True, order=True)
class CompIndex:
    column: int
    row: int

    def __post_init__(self):
        if self.column not in (1, 2) or self.row == 0:
            raise ValueError(f"bad component index {self.column, self.row}")

    @property
    def p(self) -> int:
        return 0 if self.column == 2 else 1

    def __neg__(self) -> "CompIndex":
        return CompIndex(3 - self.column, -self.row)

    def hat(self) -> "CompIndex | None":
        return CompIndex(2, self.row) if self.column == 1 else None

    def tilde(self) -> "CompIndex | None":
        return CompIndex(1, self.row) if self.column == 2 else None

    def label(self) -> str:
        return f"{'n' if self.column == 2 else '-n'}{self.row:+d}"


def dictionary(n: int) -> dict:
    """Printed gl(4n) label for every component index."""
    return {CompIndex(c, a).label(): (c, a) for c in (1, 2) for a in index_set(n)}


def _canon_pair(a: int, b: int) -> tuple:
    return min((a, b), (-b, -a))


class Algebra:
    """Generator tables of ``a`` for a fixed ``n`` plus memoized mode kernels."""

    def __init__(self, n: int, trace: bool = True):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.trace = int(trace)
        self.key = (n, bool(trace))
        idx = index_set(n)
        gens = [("E", a, b) for a in idx for b in idx]
        sym = sorted({_canon_pair(a, b) for a in idx for b in idx})
        gens += [("G", a, b) for a, b in sym] + [("P", a, b) for a, b in sym]
        self.gens = gens
        self.gid = {g: k for k, g in enumerate(gens)}
        self.parity = [1 if g[0] == "P" else 0 for g in gens]
        self._br: dict = {}
        self._act: dict = {}
        self._prod: dict = {}

    def __reduce__(self):
        return (algebra, (self.n, bool(self.trace)))

    # generators
    def e(self, a: int, b: int) -> int:
        return self.gid[("E", a, b)]

    def g(self, kind: str, a: int, b: int) -> int:
        return self.gid[(kind, *_canon_pair(a, b))]

    def name(self, k: int) -> str:
        kind, a, b = self.gens[k]
        if kind == "E":
            return f"F[{CompIndex(2, a).label()},{CompIndex(2, b).label()}]"
        head = "F" if kind == "G" else "psi"
        return f"{head}[{CompIndex(2, a).label()},{CompIndex(1, b).label()}]"

    def bracket(self, x: int, y: int) -> tuple:
        key = (x, y)
        hit = self._br.get(key)
        if hit is None:
            hit = self._br[key] = self._bracket(x, y)
        return hit

    def _bracket(self, x: int, y: int) -> tuple:
        kx, a, b = self.gens[x]
        ky, c, d = self.gens[y]
        out: dict = {}

        def put(k, v):
            out[k] = out.get(k, 0) + v

        if kx == "E" and ky == "E":
            if b == c:
                put(self.e(a, d), 1)
            if d == a:
                put(self.e(c, b), -1)
        elif kx == "E":
            if b == c:
                put(self.g(ky, a, d), 1)
            if b == -d:
                put(self.g(ky, a, -c), 1)
        elif ky == "E":
            return tuple((k, -v) for k, v in self.bracket(y, x))
        return tuple((k, v) for k, v in sorted(out.items()) if v)

    def kappa(self, x: int, y: int):
        """``kappa(x, y)`` as a ParamPoly, or 0."""
        kx, a, b = self.gens[x]
        ky, c, d = self.gens[y]
        if kx == ky == "E":
            k = int(a == d and b == c)
            t = self.trace * int(a == b and c == d)
            if k or t:
                return ALPHA * k + t
        return 0

    # mode kernels
    def act(self, g: int, m: int, mono: tuple) -> dict:
        """``g[m]`` applied to a PBW monomial; result is a fresh-or-cached dict."""
        key = (g, m, mono)
        hit = self._act.get(key)
        if hit is None:
            hit = self._act[key] = self._act_raw(g, m, mono)
        return hit

    def _act_raw(self, g: int, m: int, mono: tuple) -> dict:
        if not mono:
            return {((g, -m),): ONE} if m < 0 else {}
        if m < 0:
            here = (g, -m)
            if here < mono[0]:
                return {(here,) + mono: ONE}
            if here == mono[0]:
                return {} if self.parity[g] else {(here,) + mono: ONE}
        h, k = mono[0]
        rest = mono[1:]
        out: dict = {}
        sgn = -1 if self.parity[g] and self.parity[h] else 1
        for mono2, c in self.act(g, m, rest).items():
            lin_add(out, self.act(h, -k, mono2), c * sgn)
        for x, coef in self.bracket(g, h):
            lin_add(out, self.act(x, m - k, rest), coef)
        if m == k:
            kap = self.kappa(g, h)
            if kap:
                lin_add(out, {rest: kap}, m)
        return out

    def prod(self, A: tuple, m: int, C: tuple) -> dict:
        """``A_{(m)} C`` for PBW monomials, expanding ``A = g[-k] v`` on the left."""
        if not A:
            return {C: ONE} if m == -1 else {}
        key = (A, m, C)
        hit = self._prod.get(key)
        if hit is not None:
            return hit
        (g, k), v = A[0], A[1:]
        wv, wc = weight(v), weight(C)
        out: dict = {}
        j = 0
        while m + j <= wv + wc - 1:
            inner = self.prod(v, m + j, C)
            if inner:
                b = comb(k + j - 1, j)
                for mono, c in inner.items():
                    lin_add(out, self.act(g, -k - j, mono), c * b)
            j += 1
        sig = -(-1) ** k
        if self.parity[g] and mono_parity(self, v):
            sig = -sig
        for j in range(wc + 1):
            inner = self.act(g, j, C)
            if inner:
                b = comb(k + j - 1, j) * sig
                for mono, c in inner.items():
                    lin_add(out, self.prod(v, m - k - j, mono), c * b)
        self._prod[key] = out
        return out

    def derive(self, mono: tuple) -> dict:
        if not mono:
            return {}
        (g, k), rest = mono[0], mono[1:]
        out: dict = {}
        lin_add(out, self.act(g, -k - 1, rest), k)
        for m2, c in self.derive(rest).items():
            lin_add(out, self.act(g, -k, m2), c)
        return out


def weight(mono: tuple) -> int:
    return sum(k for _, k in mono)


def mono_parity(alg: Algebra, mono: tuple) -> int:
    return sum(alg.parity[g] for g, _ in mono) % 2


@lru_cache(maxsize=None)
def _algebra(n: int, trace: bool) -> Algebra:
    return Algebra(n, trace)


def algebra(n: int, trace: bool = True) -> Algebra:
    return _algebra(n, bool(trace))


class VAState:
    """Finite combination of PBW monomials with ParamPoly coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict | None = None):
        self.alg = alg
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    @property
    def n(self) -> int:
        return self.alg.n

    @classmethod
    def vacuum(cls, alg: Algebra) -> "VAState":
        return cls(alg, {(): ONE})

    @classmethod
    def gen(cls, alg: Algebra, g: int, depth: int = 1, coeff=ONE) -> "VAState":
        if depth < 1:
            raise ValueError("depth must be positive")
        return cls(alg, {((g, depth),): ParamPoly.coerce(coeff)})

    def _same(self, other):
        if not isinstance(other, VAState) or other.alg.key != self.alg.key:
            raise TypeError("states of different algebras")

    def __add__(self, other: "VAState") -> "VAState":
        self._same(other)
        return VAState(self.alg, lin_add(dict(self.terms), other.terms, 1))

    def __sub__(self, other: "VAState") -> "VAState":
        self._same(other)
        return VAState(self.alg, lin_add(dict(self.terms), other.terms, -1))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "VAState":
        c = ParamPoly.coerce(c)
        return VAState(self.alg, {k: v * c for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, VAState):
            return NotImplemented
        return self.alg.key == other.alg.key and self.terms == other.terms

    def __hash__(self):
        return hash((self.alg.n, self.alg.trace, frozenset(self.terms.items())))

    def weights(self) -> set:
        return {weight(m) for m in self.terms}

    def has_odd(self) -> bool:
        par = self.alg.parity
        return any(par[g] for m in self.terms for g, _ in m)

    def describe(self) -> str:
        if not self.terms:
            return "0"
        alg = self.alg
        parts = []
        for mono in sorted(self.terms):
            word = "".join(f"{alg.name(g)}[-{k}]" for g, k in mono) or "|0>"
            parts.append(f"({self.terms[mono]}){word}")
        return " + ".join(parts)

    __repr__ = describe


def _lift(alg: Algebra, fn, state: VAState) -> VAState:
    out: dict = {}
    for mono, c in state.terms.items():
        lin_add(out, fn(mono), c)
    return VAState(alg, out)


def nth_product(a: VAState, m: int, b: VAState) -> VAState:
    """``a_{(m)} b``."""
    a._same(b)
    alg = a.alg
    out: dict = {}
    for A, ca in a.terms.items():
        for C, cb in b.terms.items():
            lin_add(out, alg.prod(A, m, C), ca * cb)
    return VAState(alg, out)


def mode(g: int, m: int, b: VAState) -> VAState:
    """The single mode ``g[m]`` acting on ``b``."""
    return _lift(b.alg, lambda mono: b.alg.act(g, m, mono), b)


def translate(a: VAState, times: int = 1) -> VAState:
    for _ in range(times):
        a = _lift(a.alg, a.alg.derive, a)
    return a


# sp(4n) elements -------------------------------------------------------------

@dataclass(frozen=True)
class SuperGen:
    """``F_{row,col}`` (even) or ``psi_{row,col}`` (odd) in component indices."""

    kind: str
    row: CompIndex
    col: CompIndex

    @property
    def parity(self) -> int:
        return 1 if self.kind == "psi" else 0

    def expand(self, alg: Algebra) -> list:
        """Canonical generators ``[(gid, coeff)]``; raises outside ``a``."""
        r, c = self.row, self.col
        if self.kind == "psi":
            if (r.p, c.p) != (0, 1):
                raise ValueError("psi_{i,j} needs p(i)=0, p(j)=1")
            return [(alg.g("P", r.row, c.row), 1)]
        if r.p == c.p == 0:
            return [(alg.e(r.row, c.row), 1)]
        if r.p == c.p == 1:
            return [(alg.e(-c.row, -r.row), -1)]
        if (r.p, c.p) == (0, 1):
            return [(alg.g("G", r.row, c.row), 1)]
        raise ValueError("F_{i,j} with p(i)=1, p(j)=0 lies outside b")

    def state(self, alg: Algebra, depth: int = 1) -> VAState:
        out = VAState(alg)
        for g, c in self.expand(alg):
            out = out + VAState.gen(alg, g, depth, c)
        return out


def F(alg: Algebra, row: CompIndex, col: CompIndex, depth: int = 1) -> VAState:
    return SuperGen("F", row, col).state(alg, depth)


def kappa(alg: Algebra, x: SuperGen, y: SuperGen) -> ParamPoly:
    """The invariant form on ``a`` (zero on psi)."""
    tot = ParamPoly.const(0)
    if x.parity or y.parity:
        return tot
    for gx, cx in x.expand(alg):
        for gy, cy in y.expand(alg):
            tot = tot + ParamPoly.coerce(alg.kappa(gx, gy)) * (cx * cy)
    return tot


def kappa_formula(x: SuperGen, y: SuperGen) -> ParamPoly:
    """The bare matrix-index expression of kappa(F_{i,j}, F_{a,b})."""
    if x.parity or y.parity:
        return ParamPoly.const(0)
    i, j, a, b = x.row, x.col, y.row, y.col
    sgn = (-1) ** (i.p + j.p)
    return ALPHA * (int(i == b and j == a) - sgn * int(-j == b and -i == a))


def super_bracket(alg: Algebra, x: SuperGen, y: SuperGen) -> VAState:
    """``[x, y]`` as a depth-one state (zero-mode action on ``y[-1]|0>``)."""
    ys = y.state(alg)
    out = VAState(alg)
    for g, c in x.expand(alg):
        out = out + mode(g, 0, ys).scale(c)
    return out


# W-algebra generators --------------------------------------------------------

def _two(alg: Algebra, x: tuple, y: tuple) -> VAState:
    """``x[-1] y[-1] |0>`` for signed canonical generators (written order)."""
    out: dict = {}
    for mono, c in alg.act(y[0], -1, ()).items():
        lin_add(out, alg.act(x[0], -1, mono), c * (x[1] * y[1]))
    return VAState(alg, out)


def _lo(a):
    return CompIndex(1, a)


def _hi(a):
    return CompIndex(2, a)


def w_gen(order: int, i: int, j: int, n: int, trace: bool = True) -> VAState:
    """``W1_{i,j} = F_{-n+i,-n+j}[-1] + F_{n+i,n+j}[-1]`` and
    ``W2_{i,j} = F_{n+i,-n+j}[-1] + (alpha-1)F_{n+i,n+j}[-2]
    + sum_u F_{-n+u,-n+j}[-1]F_{n+i,n+u}[-1]``."""
    idx = index_set(n)
    if i not in idx or j not in idx:
        raise ValueError(f"indices ({i},{j}) outside I_{n}")
    alg = algebra(n, trace)
    if order == 1:
        return F(alg, _lo(i), _lo(j)) + F(alg, _hi(i), _hi(j))
    if order != 2:
        raise ValueError("order must be 1 or 2")
    out = F(alg, _hi(i), _lo(j)) + F(alg, _hi(i), _hi(j), 2).scale(ALPHA - 1)
    for u in idx:
        (x,) = SuperGen("F", _lo(u), _lo(j)).expand(alg)
        (y,) = SuperGen("F", _hi(i), _hi(u)).expand(alg)
        out = out + _two(alg, x, y)
    return out


def W(order: int, i: int, j: int, n: int, trace: bool = True) -> VAState:
    """Memoized :func:`w_gen`."""
    return _W(order, i, j, n, bool(trace))


@lru_cache(maxsize=None)
def _W(order, i, j, n, trace):
    return w_gen(order, i, j, n, trace)


# d0 --------------------------------------------------------------------------

class OddInputError(ValueError):
    def __init__(self):
        super().__init__("d0 is defined on V(b); input contains psi")


def _d0_gen(alg: Algebra, g: int) -> VAState:
    """``d0(g[-1]|0>)`` for a canonical even generator."""
    kind, a, b = alg.gens[g]
    P = lambda x, y: alg.g("P", x, y)
    if kind == "E":
        # F_{a,b} with p(a)=p(b): psi_{hat a,b} - psi_{a,tilde b}
        return VAState.gen(alg, P(a, b), 1, -1)
    # (k+n+1) = alpha-1
    out = VAState.gen(alg, P(a, b), 2, ALPHA - 1)
    for u in index_set(alg.n):
        # F_{u-n,b-n} = -E(-b,-u)
        out = out + _two(alg, (alg.e(-b, -u), -1), (P(a, u), 1))
        out = out - _two(alg, (P(u, b), 1), (alg.e(a, u), 1))
    return out


@lru_cache(maxsize=None)
def _d0_gen_depth(alg: Algebra, g: int, k: int) -> VAState:
    return translate(_d0_gen(alg, g), k - 1).scale(Fraction(1, factorial(k - 1)))


def d0_apply(a: VAState) -> VAState:
    """The odd differential, extended from generators as a derivation of the
    (-1)-product that commutes with the translation."""
    if a.has_odd():
        raise OddInputError()
    alg = a.alg
    memo: dict = {}

    def mono_d0(mono):
        if mono in memo:
            return memo[mono]
        if not mono:
            return {}
        (g, k), rest = mono[0], mono[1:]
        out: dict = {}
        for A, c in _d0_gen_depth(alg, g, k).terms.items():
            lin_add(out, alg.prod(A, -1, rest), c)
        for m2, c in mono_d0(rest).items():
            lin_add(out, alg.act(g, -k, m2), c)
        memo[mono] = out
        return out

    return _lift(alg, mono_d0, a)


__all__ = ["CompIndex", "SuperGen", "VAState", "Algebra", "algebra", "dictionary", "index_set",
           "nth_product", "mode", "translate", "F", "kappa", "kappa_formula", "super_bracket",
           "w_gen", "W", "d0_apply", "OddInputError", "weight"]
