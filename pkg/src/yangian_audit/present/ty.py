"""Relation shells of the two-parameter algebra ty.

Only the first nine families live here; their right sides mention the
elements ``f_{i,i}`` (named ``"f"``), ``(f_{1,1}-f_{2,2})t^u`` (named
``"Et"``) and scalars, which the target assignment must resolve.  The three
deformed relations are built by :mod:`yangian_audit.ueva`.
"""
from __future__ import annotations

from ..coeff import EPS, HBAR, ONE
from .dn import PM, a_even, a_odd
from .engine import RelationSpec, Window
from .expr import ZERO_EXPR, Br, Gen, Named, Scalar, lin, nested


def x(pm: int, i: int, r: int) -> Gen:
    return Gen("x+" if pm > 0 else "x-", i, r)


def h(i: int, r: int) -> Gen:
    return Gen("h", i, r)


def is_generator(g: Gen, n: int) -> bool:
    if g.family == "h":
        return (0 <= g.index <= n and g.level == 0) or (1 <= g.index <= n - 1 and g.level == 1)
    return g.family in ("x+", "x-") and 0 <= g.index <= n and g.level in (0, 1)


def f_diag(i: int) -> Named:
    return Named("f", (i, i, 0))


def _doms(n: int, w: Window) -> dict:
    return {"i": range(n + 1), "j": range(n + 1), "r": (0, 1), "pm": PM,
            "t": range(-w.rmax, w.rmax + 1)}


def _rel(id_, text, variables, build, cond=None, corrected=None, note=""):
    return RelationSpec(id_, text, tuple(variables), _doms, build, cond or (lambda n, b: True),
                        corrected, note)


def _rel1(n, b):
    return Br(h(b["i"], 0), h(b["j"], b["r"])), ZERO_EXPR


def _rel2(n, b):
    return (Br(h(b["i"], 0), x(b["pm"], b["j"], 0)),
            lin((b["pm"] * a_even(n, b["i"], b["j"]), x(b["pm"], b["j"], 0))))


def _rel5(n, b):
    return (Br(x(1, b["i"], 0), x(-1, b["j"], 0)),
            lin((1, h(b["i"], 0))) if b["i"] == b["j"] else ZERO_EXPR)


def _rel3(n, b):
    i, j = b["i"], b["j"]
    rhs = lin((a_odd(n, i, j), x(1, j, 1)))
    if (i, j) == (1, 0):
        rhs = rhs + lin((2 * (EPS + 1) * HBAR, x(1, j, 0)))
    elif (i, j) == (2, 0):
        rhs = rhs + lin((-(EPS + 3) * HBAR, x(1, j, 0)))
    return Br(h(i, 1), x(1, j, 0)), rhs


def _rel3_fixed(n, b):
    i, j = b["i"], b["j"]
    rhs = lin((a_odd(n, i, j), x(1, j, 1)))
    extra = {(1, 0): 2 * EPS * HBAR, (2, 0): -(EPS + 1) * HBAR, (n - 1, n): -EPS * HBAR}.get((i, j))
    if extra is not None:
        rhs = rhs + lin((extra, x(1, j, 0)))
    return Br(h(i, 1), x(1, j, 0)), rhs


def _rel35(n, b):
    i, j = b["i"], b["j"]
    rhs = lin((-a_odd(n, i, j), x(-1, j, 1)))
    if (i, j) == (2, 0):
        rhs = rhs + lin((HBAR, x(-1, j, 0)))
    return Br(h(i, 1), x(-1, j, 0)), rhs


def _rel35_fixed(n, b):
    i, j = b["i"], b["j"]
    rhs = lin((-a_odd(n, i, j), x(-1, j, 1)))
    extra = {(2, 0): HBAR, (n - 1, n): EPS * HBAR}.get((i, j))
    if extra is not None:
        rhs = rhs + lin((extra, x(-1, j, 0)))
    return Br(h(i, 1), x(-1, j, 0)), rhs


def _rel6(n, b):
    i = b["i"]
    lhs = Br(x(1, i, 1), x(-1, i, 0))
    if 1 <= i <= n - 1:
        return lhs, lin((1, h(i, 1)))
    if i == n:
        return lhs, lin((1, h(n - 1, 1)), (HBAR * (EPS + 1), f_diag(n)))
    rhs = lin((-1, h(1, 1)), (2 * HBAR * EPS, f_diag(2)), (-HBAR, f_diag(1)),
              (ONE, Scalar(-HBAR * EPS * (EPS + 1))))
    return lhs, rhs


def _rel6_fixed(n, b):
    i = b["i"]
    lhs = Br(x(1, i, 1), x(-1, i, 0))
    if 1 <= i <= n - 1:
        return lhs, lin((1, h(i, 1)))
    if i == n:
        return lhs, lin((1, h(n - 1, 1)), (HBAR * EPS, f_diag(n)))
    return lhs, lin((1, h(1, 1)), (HBAR * (EPS + 1), f_diag(2)), (HBAR * (EPS - 1), f_diag(1)),
                    (ONE, Scalar(-2 * HBAR * EPS * EPS)))


def _rel9(n, b):
    et = Named("Et", (b["t"],))
    return Br(x(1, 1, 1), Br(x(-1, 1, 0), et)), Br(x(1, 1, 0), Br(x(-1, 1, 1), et))


def ty_relations(n: int) -> list:
    return [
        _rel("rel1", "[h_{i,0},h_{j,0}] = 0, [h_{i,0},h_{j,1}] = 0", "ijr", _rel1,
             lambda n, b: b["r"] == 0 or 1 <= b["j"] <= n - 1),
        _rel("rel2", "[h_{i,0},x^pm_{j,0}] = pm a^0_{i,j} x^pm_{j,0}", ("i", "j", "pm"), _rel2,
             None, _rel2, "rel2: at i=0 the target image of h_{0,0} needs the opposite sign"),
        _rel("rel3", "[h_{i,1},x^+_{j,0}] = a^1_{i,j} x^+_{j,1} + correction", "ij", _rel3,
             lambda n, b: 1 <= b["i"] <= n - 1, _rel3_fixed,
             "rel3: constants 2(eps+1), -(eps+3) become 2eps, -(eps+1); (n-1,n) needs -eps*hbar x^+_{n,0}"),
        _rel("rel3.5", "[h_{i,1},x^-_{j,0}] = -a^1_{i,j} x^-_{j,1} + correction", "ij", _rel35,
             lambda n, b: 1 <= b["i"] <= n - 1, _rel35_fixed,
             "rel3.5: (n-1,n) needs +eps*hbar x^-_{n,0}"),
        _rel("rel5", "[x^+_{i,0},x^-_{j,0}] = delta_{i,j} h_{i,0}", "ij", _rel5, None, _rel5,
             "rel5: at i=j=0 the target image of h_{0,0} needs the opposite sign"),
        _rel("rel6", "[x^+_{i,1},x^-_{i,0}] = h_{i,1} + correction", "i", _rel6, None, _rel6_fixed,
             "rel6: i=n uses hbar*eps f_{n,n}; i=0 is h_{1,1}+hbar(eps+1)f_{2,2}+hbar(eps-1)f_{1,1}-2hbar eps^2"),
        _rel("rel7", "[x^pm_{i,1},x^pm_{i,0}] = 0", ("i", "pm"),
             lambda n, b: (Br(x(b["pm"], b["i"], 1), x(b["pm"], b["i"], 0)), ZERO_EXPR)),
        _rel("rel8", "[x^pm_{i,0},x^pm_{j,0}] = 0 if a^0_{i,j} = 0", ("i", "j", "pm"),
             lambda n, b: (Br(x(b["pm"], b["i"], 0), x(b["pm"], b["j"], 0)), ZERO_EXPR),
             lambda n, b: b["i"] != b["j"] and a_even(n, b["i"], b["j"]) == 0),
        _rel("rel8.5", "[x^pm_{i,0},[x^pm_{i,0},x^pm_{j,0}]] = 0 if a^0_{i,j} = -1", ("i", "j", "pm"),
             lambda n, b: (nested(x(b["pm"], b["i"], 0), x(b["pm"], b["i"], 0), x(b["pm"], b["j"], 0)),
                           ZERO_EXPR),
             lambda n, b: a_even(n, b["i"], b["j"]) == -1),
        _rel("rel9", "[x^+_{1,1},[x^-_{1,0},(f11-f22)t^u]] = [x^+_{1,0},[x^-_{1,1},(f11-f22)t^u]]",
             ("t",), _rel9, None, None,
             "rel9: fails under Phi by u(2-eps)hbar(f_{1,1}+f_{2,2})t^u; no corrected reading"),
    ]


__all__ = ["x", "h", "is_generator", "f_diag", "ty_relations"]
