"""The central extension D(2n) of the tau-fixed loop algebra.

Generators ``H_{i,r}`` (1<=i<=n-1), ``H_{0,2r}``, ``H_{n,2r}``, ``X^pm_{i,r}``
(0<=i<=n) and ``X^pm_{-1,2r+1}``, ``X^pm_{n+1,2r+1}``.  Two realizations are
provided: ``pi`` into the centreless loop algebra and ``phi`` into the
Kassel extension (the image of ``H_{0,r}`` picks up ``2u^{-1}v^r du``).
"""
from __future__ import annotations

from ..coeff import ONE, ZERO
from ..loop import CenterElement, LoopElement, LoopModel, f_elem
from .. import roots
from .engine import Assignment, RelationSpec, Window
from .expr import ZERO_EXPR, Br, Gen, Named, lin, nested

PM = (1, -1)


def X(pm: int, i: int, r: int) -> Gen:
    return Gen("X+" if pm > 0 else "X-", i, r)


def H(i: int, r: int) -> Gen:
    return Gen("H", i, r)


def a_even(n: int, i: int, j: int) -> int:
    return roots.cartan(n)[i][j]


def a_odd(n: int, i: int, j: int) -> int:
    if n < 4:  # rows 1 and n-1 would both touch the branch nodes
        raise roots.RankTooSmall("odd-level Cartan rows need n >= 4")
    if not 1 <= i <= n - 1:
        raise ValueError(f"odd-level Cartan row {i} undefined")
    if i == n - 1:
        return 2 * (j == n - 1) + 2 * (j == n) - (j == n - 2)
    if i == 1:
        return 2 * (j == 1) + 2 * (j == 0) - (j == 2)
    return a_even(n, i, j)


def a_level(n: int, r: int, i: int, j: int) -> int:
    return a_odd(n, i, j) if r % 2 else a_even(n, i, j)


def is_generator(g: Gen, n: int) -> bool:
    if g.level < 0:
        return False
    if g.family == "H":
        if 1 <= g.index <= n - 1:
            return True
        return g.index in (0, n) and g.level % 2 == 0
    if g.family in ("X+", "X-"):
        if 0 <= g.index <= n:
            return True
        return g.index in (-1, n + 1) and g.level % 2 == 1
    return False


def _fd(i, j, r):
    return f_elem(i, j, 0, r)


def loop_image(g: Gen, n: int, central: bool, extend_h: bool = False) -> LoopElement | None:
    """Image of a D(2n) generator; ``None`` when the symbol is not a generator.

    ``extend_h`` also accepts ``H_{0,r}``, ``H_{n,r}`` at odd ``r`` using the
    same formula.
    """
    i, r = g.index, g.level
    if not is_generator(g, n):
        if not (extend_h and g.family == "H" and i in (0, n) and r >= 0):
            return None
    sgn = -1 if r % 2 else 1
    if g.family == "H":
        if 1 <= i <= n - 1:
            return _fd(i, i, r) - _fd(i + 1, i + 1, r)
        if i == n:
            return _fd(n - 1, n - 1, r) + _fd(n, n, r)
        out = -(_fd(1, 1, r) + _fd(2, 2, r))
        if central:
            out = out + LoopElement.central(CenterElement(du={r: ONE * 2}))
        return out
    if g.family == "X+":
        if 1 <= i <= n - 1:
            return _fd(i, i + 1, r)
        if i == n:
            return _fd(n - 1, -n, r)
        if i == 0:
            return f_elem(-2, 1, 1, r, sgn)
        if i == n + 1:
            return _fd(n, -n, r)
        return f_elem(-1, 1, 1, r)
    if 1 <= i <= n - 1:
        return _fd(i + 1, i, r)
    if i == n:
        return _fd(-n, n - 1, r)
    if i == 0:
        return f_elem(1, -2, -1, r, sgn)
    if i == n + 1:
        return _fd(-n, n, r)
    return f_elem(1, -1, -1, r)


def loop_named(name: str, params: tuple):
    if name == "Et":
        (u,) = params
        return f_elem(1, 1, u, 0) - f_elem(2, 2, u, 0)
    if name == "ftilde":
        p, q, r, s = params
        return f_elem(p, q, r, s)
    return None


def _lower_to_upper(g: Gen) -> Gen:
    fam = {"x+": "X+", "x-": "X-", "h": "H"}.get(g.family, g.family)
    return Gen(fam, g.index, g.level)


def pi_assignment(n: int, extend_h: bool = False) -> Assignment:
    return Assignment("pi", LoopModel(central=False),
                      lambda g: loop_image(_lower_to_upper(g), n, False, extend_h), loop_named)


def phi_assignment(n: int, extend_h: bool = False) -> Assignment:
    return Assignment("phi", LoopModel(central=True),
                      lambda g: loop_image(_lower_to_upper(g), n, True, extend_h), loop_named)


def assignment(target: str, n: int, extend_h: bool = False) -> Assignment:
    if target == "pi":
        return pi_assignment(n, extend_h)
    if target == "phi":
        return phi_assignment(n, extend_h)
    raise ValueError(f"unknown target {target!r}")


# degrees -------------------------------------------------------------------

def generator_degree(g: Gen, n: int, literal: bool = False):
    """``(RootVector, level)``; the printed table keys ``alpha_0 - alpha_1`` on
    ``i = 0`` (clashing with ``alpha_0``), ``literal=False`` keys it on ``i = -1``."""
    g = _lower_to_upper(g)
    zero = (0,) * (n + 1)
    if g.family == "H":
        return zero, g.level
    sign = 1 if g.family == "X+" else -1
    i = g.index
    if 0 <= i <= n:
        return roots.scale(sign, roots.simple_root(i, n)), g.level
    if i == n + 1:
        v = roots.add(roots.simple_root(n, n), roots.scale(-1, roots.simple_root(n - 1, n)))
    elif i == -1 and not literal:
        v = roots.add(roots.simple_root(0, n), roots.scale(-1, roots.simple_root(1, n)))
    else:
        return None
    return roots.scale(sign, v), g.level


def element_degrees(x: LoopElement, n: int) -> set:
    """Set of ``(RootVector, v-degree)`` over the body of ``x``."""
    out = set()
    for (i, j, r, s) in x.body:
        gamma, d = roots.matrix_unit_degree(i, j, r, n)
        out.add((roots.from_finite(gamma, d, n), s))
    return out


def degree_check(n: int, rmax: int = 3, literal: bool = False) -> list:
    """Generators whose pi-image is not homogeneous of the declared degree."""
    bad = []
    for fam in ("H", "X+", "X-"):
        for i in range(-1, n + 2):
            for r in range(rmax + 1):
                g = Gen(fam, i, r)
                if not is_generator(g, n):
                    continue
                want = generator_degree(g, n, literal)
                got = element_degrees(loop_image(g, n, False), n)
                if want is None or got != {want}:
                    bad.append((str(g), want, sorted(got)))
    return bad


def expr_degrees(e, n: int) -> set:
    """Degrees of the bracket monomials of a formal expression."""
    from .expr import Lin
    if isinstance(e, Gen):
        return {generator_degree(e, n)}
    if isinstance(e, Br):
        return {(roots.add(a[0], b[0]), a[1] + b[1])
                for a in expr_degrees(e.a, n) for b in expr_degrees(e.b, n)}
    if isinstance(e, Lin):
        out = set()
        for _, x in e.terms:
            out |= expr_degrees(x, n)
        return out
    if isinstance(e, Named) and e.name == "Et":
        return {(roots.scale(e.params[0], roots.delta(n)), 0)}
    if isinstance(e, Named) and e.name == "ftilde":
        p, q, r, s = e.params
        gamma, d = roots.matrix_unit_degree(p, q, r, n)
        return {(roots.from_finite(gamma, d, n), s)}
    raise TypeError(f"no degree for {e}")


# relations -----------------------------------------------------------------

def _doms(n: int, w: Window) -> dict:
    return {
        "i": range(0, n + 1), "j": range(0, n + 1), "r": range(w.rmax + 1),
        "s": range(w.smax + 1), "u": range(w.smax + 1), "pm": PM, "pm2": PM, "c": (0, 1),
        "t": range(-w.rmax, w.rmax + 1),
    }


def _gens_ok(n, *gs) -> bool:
    return all(is_generator(g, n) for g in gs)


def _odd(m: int) -> int:
    return m % 2


def _rel(id_, text, variables, build, cond=None, corrected=None, note="", doms=_doms):
    return RelationSpec(id_, text, tuple(variables), doms, build,
                        cond or (lambda n, b: True), corrected, note)


def _r5111(n, b):
    return Br(H(b["i"], b["r"]), H(b["j"], b["s"])), ZERO_EXPR


def _r5112(n, b):
    i, j, r, s, pm = b["i"], b["j"], b["r"], b["s"], b["pm"]
    return Br(H(i, r), X(pm, j, s)), lin((pm * a_level(n, r, i, j), X(pm, j, r + s)))


_EXC_5113 = lambda n: {(n - 1, n), (n, n - 1), (0, 1), (1, 0)}


def _r5113(n, b):
    i, j, r, s = b["i"], b["j"], b["r"], b["s"]
    m = r + s
    lhs = Br(X(1, i, r), X(-1, j, s))
    if i == j == n:
        return lhs, lin((1, H(n - 1, m)))
    if i == j == 0:
        return lhs, lin(((-1) ** m, H(1, m)))
    return lhs, (lin((1, H(i, m))) if i == j else ZERO_EXPR)


def _r5113_fix(n, b):
    i, j, r, s = b["i"], b["j"], b["r"], b["s"]
    m = r + s
    lhs = Br(X(1, i, r), X(-1, j, s))
    if i == j == n:
        return lhs, lin((1, H(n if m % 2 == 0 else n - 1, m)))
    if i == j == 0:
        return lhs, lin((1, H(0 if m % 2 == 0 else 1, m)))
    return _r5113(n, b)


def _pair(lhs_a, lhs_b, coeff, rhs_gen):
    lhs = Br(lhs_a, lhs_b)
    if coeff == 0 or rhs_gen is None:
        return lhs, ZERO_EXPR
    return lhs, lin((coeff, rhs_gen))


def _r5114(n, b):
    r, s, m = b["r"], b["s"], b["r"] + b["s"]
    if b["c"] == 0:
        return _pair(X(1, n - 1, r), X(-1, n, s), -_odd(m), X(-1, n + 1, m))
    return _pair(X(1, n, r), X(-1, n - 1, s), -_odd(m), X(1, n + 1, m))


def _r5115(n, b):
    r, s, m = b["r"], b["s"], b["r"] + b["s"]
    if b["c"] == 0:
        return _pair(X(1, 0, r), X(-1, 1, s), -_odd(m), X(1, -1, m))
    return _pair(X(1, 1, r), X(-1, 0, s), -_odd(m), X(-1, -1, m))


def _r5116(n, b):
    return Br(X(b["pm"], b["i"], b["r"]), X(b["pm2"], n + 1, b["s"])), ZERO_EXPR


def _r5116_fix(n, b):
    # at i = n-1 the brackets are the ones listed for X_{n-1} against X_{n+1}
    i, r, s, pm, pm2 = b["i"], b["r"], b["s"], b["pm"], b["pm2"]
    if i != n - 1:
        return _r5116(n, b)
    lhs = Br(X(pm, i, r), X(pm2, n + 1, s))
    if pm == pm2:
        return lhs, lin((2 * pm, X(pm, n, r + s)))
    return lhs, ZERO_EXPR


def _r5117(n, b):
    return Br(X(b["pm"], b["i"], b["r"]), X(b["pm2"], -1, b["s"])), ZERO_EXPR


def _two(table):
    """Relation with two clauses ``c = 0, 1``; ``table[c] = (pm_a, i_a, pm_b, i_b, coeff, pm_rhs, i_rhs)``."""
    def build(n, b):
        pa, ia, pb, ib, k, pr, ir = table(n)[b["c"]]
        m = b["r"] + b["s"]
        return _pair(X(pa, ia, b["r"]), X(pb, ib, b["s"]), k, X(pr, ir, m) if k else None)
    return build


_T5118 = lambda n: [(1, n - 1, 1, n + 1, 2, 1, n), (-1, n - 1, 1, n + 1, 0, 0, 0)]
_T5119 = lambda n: [(1, n - 1, -1, n + 1, 0, 0, 0), (-1, n - 1, -1, n + 1, -2, -1, n)]
_T5120 = lambda n: [(1, n, 1, n + 1, 0, 0, 0), (-1, n, 1, n + 1, -2, 1, n - 1)]
_T5120_FIX = lambda n: [(1, n, 1, n + 1, 0, 0, 0), (-1, n, 1, n + 1, -2, -1, n - 1)]
_T5121 = lambda n: [(1, n, -1, n + 1, 2, 1, n - 1), (-1, n, -1, n + 1, 0, 0, 0)]
_T5122 = lambda n: [(1, 0, 1, -1, 0, 0, 0), (-1, 0, 1, -1, -2, -1, 1)]
_T5123 = lambda n: [(1, 0, -1, -1, 2, 1, 1), (-1, 0, -1, -1, 0, 0, 0)]
_T5124 = lambda n: [(1, 1, 1, -1, 2, 1, 0), (-1, 1, 1, -1, 0, 0, 0)]
_T5125 = lambda n: [(1, 1, -1, -1, 0, 0, 0), (-1, 1, -1, -1, -2, -1, 0)]


def _r5126(n, b):
    return Br(X(b["pm"], b["i"], b["r"]), X(b["pm"], b["i"], b["s"])), ZERO_EXPR


def _r5127(n, b):
    i, j, r, s, pm = b["i"], b["j"], b["r"], b["s"], b["pm"]
    return Br(X(pm, i, r + 1), X(pm, j, s)), Br(X(pm, i, r), X(pm, j, s + 1))


def _r5128(n, b):
    i, j = (0, 1) if b["c"] == 0 else (n - 1, n)
    r, s, pm = b["r"], b["s"], b["pm"]
    return Br(X(pm, i, r + 1), X(pm, j, s)), -Br(X(pm, i, r), X(pm, j, s + 1))


def _r5129(n, b):
    return Br(X(b["pm"], b["i"], b["r"]), X(b["pm"], b["j"], b["s"])), ZERO_EXPR


def _r5130(n, b):
    i, j, pm = b["i"], b["j"], b["pm"]
    return nested(X(pm, i, b["r"]), X(pm, i, b["s"]), X(pm, j, b["u"])), ZERO_EXPR


def _serre_odd(i, j):
    def build(n, b):
        ii = i(n) if callable(i) else i
        jj = j(n) if callable(j) else j
        pm = b["pm"]
        return nested(X(pm, ii, 0), X(pm, ii, 0), X(pm, jj, 2 * b["r"] + 1)), ZERO_EXPR
    return build


def _r5135(n, b):
    u = b["t"]
    et = Named("Et", (u,))
    lhs = Br(X(1, 1, 1), Br(X(-1, 1, 0), et)) - Br(X(1, 1, 0), Br(X(-1, 1, 1), et))
    return lhs, ZERO_EXPR


_SPECIAL_PAIRS = lambda n: {(0, 1), (1, 0), (n - 1, n), (n, n - 1)}


def d_relations(n: int) -> list:
    exists = lambda f: (lambda n_, b: _gens_ok(n_, *f(n_, b)))
    rels = [
        _rel("5111", "[H_{i,r},H_{j,s}] = 0", "ijrs", _r5111,
             exists(lambda n_, b: (H(b["i"], b["r"]), H(b["j"], b["s"])))),
        _rel("5112", "[H_{i,r},X^pm_{j,s}] = pm a^r_{i,j} X^pm_{j,r+s}", ("i", "j", "r", "s", "pm"),
             _r5112, exists(lambda n_, b: (H(b["i"], b["r"]),))),
        _rel("5113", "[X^+_{i,r},X^-_{j,s}] = delta_{i,j} H_{i,r+s} (H_{n-1} at i=j=n, (-1)^{r+s}H_1 at i=j=0)",
             "ijrs", _r5113, lambda n_, b: (b["i"], b["j"]) not in _EXC_5113(n_),
             _r5113_fix,
             "i=j=n: H_{n,m} for even m, H_{n-1,m} for odd m; i=j=0: H_{0,m} for even m, "
             "+H_{1,m} for odd m (printed right side fails at even m and, for i=j=0, "
             "carries a wrong sign at odd m)"),
        _rel("5114", "[X^+_{n-1,r},X^-_{n,s}] = -odd X^-_{n+1,r+s}; [X^+_{n,r},X^-_{n-1,s}] = -odd X^+_{n+1,r+s}",
             "crs", _r5114),
        _rel("5115", "[X^+_{0,r},X^-_{1,s}] = -odd X^+_{-1,r+s}; [X^+_{1,r},X^-_{0,s}] = -odd X^-_{-1,r+s}",
             "crs", _r5115),
        _rel("5116", "[X^pm_{i,r},X^pm'_{n+1,s}] = 0 for 1<=i<=n-1", ("i", "r", "s", "pm", "pm2"), _r5116,
             lambda n_, b: 1 <= b["i"] <= n_ - 1 and b["s"] % 2 == 1, _r5116_fix,
             "range should stop at i=n-2; at i=n-1 the brackets with X_{n+1} are the nonzero ones "
             "listed for X_{n-1} (2X^pm_{n,r+s} for equal signs)"),
        _rel("5117", "[X^pm_{i,r},X^pm'_{-1,s}] = 0 for 2<=i<=n+1", ("i", "r", "s", "pm", "pm2"), _r5117,
             lambda n_, b: b["s"] % 2 == 1 and _gens_ok(n_, X(1, b["i"], b["r"])),
             doms=lambda n_, w: {**_doms(n_, w), "i": range(2, n_ + 2)}),
        _rel("5118", "[X^+_{n-1,r},X^+_{n+1,s}] = 2X^+_{n,r+s}; [X^-_{n-1,r},X^+_{n+1,s}] = 0", "crs",
             _two(_T5118), lambda n_, b: b["s"] % 2 == 1),
        _rel("5119", "[X^+_{n-1,r},X^-_{n+1,s}] = 0; [X^-_{n-1,r},X^-_{n+1,s}] = -2X^-_{n,r+s}", "crs",
             _two(_T5119), lambda n_, b: b["s"] % 2 == 1),
        _rel("5120", "[X^+_{n,r},X^+_{n+1,s}] = 0; [X^-_{n,r},X^+_{n+1,s}] = -2x^{r+s}_{n-1,r+s}", "crs",
             _two(_T5120), lambda n_, b: b["s"] % 2 == 1, _two(_T5120_FIX),
             "the printed symbol x^{r+s}_{n-1,r+s} (read literally as X^+_{n-1,r+s}) should be X^-_{n-1,r+s}"),
        _rel("5121", "[X^+_{n,r},X^-_{n+1,s}] = 2X^+_{n-1,r+s}; [X^-_{n,r},X^-_{n+1,s}] = 0", "crs",
             _two(_T5121), lambda n_, b: b["s"] % 2 == 1),
        _rel("5122", "[X^+_{0,r},X^+_{-1,s}] = 0; [X^-_{0,r},X^+_{-1,s}] = -2X^-_{1,r+s}", "crs",
             _two(_T5122), lambda n_, b: b["s"] % 2 == 1),
        _rel("5123", "[X^+_{0,r},X^-_{-1,s}] = 2X^+_{1,r+s}; [X^-_{0,r},X^-_{-1,s}] = 0", "crs",
             _two(_T5123), lambda n_, b: b["s"] % 2 == 1),
        _rel("5124", "[X^+_{1,r},X^+_{-1,s}] = 2X^+_{0,r+s}; [X^-_{1,r},X^+_{-1,s}] = 0", "crs",
             _two(_T5124), lambda n_, b: b["s"] % 2 == 1),
        _rel("5125", "[X^+_{1,r},X^-_{-1,s}] = 0; [X^-_{1,r},X^-_{-1,s}] = -2X^-_{0,r+s}", "crs",
             _two(_T5125), lambda n_, b: b["s"] % 2 == 1),
        _rel("5126", "[X^pm_{i,r},X^pm_{i,s}] = 0", ("i", "r", "s", "pm"), _r5126,
             lambda n_, b: _gens_ok(n_, X(1, b["i"], b["r"]), X(1, b["i"], b["s"])),
             doms=lambda n_, w: {**_doms(n_, w), "i": range(-1, n_ + 2)}),
        _rel("5127", "[X^pm_{i,r+1},X^pm_{j,s}] = [X^pm_{i,r},X^pm_{j,s+1}] (i<=j)", ("i", "j", "r", "s", "pm"),
             _r5127, lambda n_, b: b["i"] <= b["j"] and (b["i"], b["j"]) not in {(0, 1), (n_ - 1, n_)}),
        _rel("5128", "[X^pm_{0,r+1},X^pm_{1,s}] = -[X^pm_{0,r},X^pm_{1,s+1}] and the same for (n-1,n)",
             ("c", "r", "s", "pm"), _r5128),
        _rel("5129", "[X^pm_{i,r},X^pm_{j,s}] = 0 if a^0_{i,j} = 0", ("i", "j", "r", "s", "pm"), _r5129,
             lambda n_, b: b["i"] != b["j"] and a_even(n_, b["i"], b["j"]) == 0
             and (b["i"], b["j"]) not in _SPECIAL_PAIRS(n_)),
        _rel("5130", "[X^pm_{i,r},[X^pm_{i,s},X^pm_{j,u}]] = 0 if a^0_{i,j} = -1", ("i", "j", "r", "s", "u", "pm"),
             _r5130, lambda n_, b: a_even(n_, b["i"], b["j"]) == -1),
        _rel("5131", "[X^pm_{n-1,0},[X^pm_{n-1,0},X^pm_{n,2r+1}]] = 0", ("r", "pm"),
             _serre_odd(lambda n_: n_ - 1, lambda n_: n_)),
        _rel("5132", "[X^pm_{n,0},[X^pm_{n,0},X^pm_{n-1,2r+1}]] = 0", ("r", "pm"),
             _serre_odd(lambda n_: n_, lambda n_: n_ - 1)),
        _rel("5133", "[X^pm_{1,0},[X^pm_{1,0},X^pm_{0,2r+1}]] = 0", ("r", "pm"), _serre_odd(1, 0)),
        _rel("5134", "[X^pm_{0,0},[X^pm_{0,0},X^pm_{1,2r+1}]] = 0", ("r", "pm"), _serre_odd(0, 1)),
        _rel("5135", "[X^+_{1,1},[X^-_{1,0},(E11-E22)t^u]] - [X^+_{1,0},[X^-_{1,1},(E11-E22)t^u]] = 0",
             ("t",), _r5135),
    ]
    return rels


__all__ = ["X", "H", "a_even", "a_odd", "a_level", "is_generator", "loop_image", "pi_assignment",
           "phi_assignment", "assignment", "generator_degree", "element_degrees", "degree_check",
           "expr_degrees", "d_relations", "PM", "ZERO", "nested"]
