"""Finite presentation of D(2n): levels 0 and 1 only.

Lower-case symbols ``x^pm_{i,r}``, ``h_{i,r}`` are sent to the images of the
corresponding D(2n) generators, so the pi/phi assignments of :mod:`.dn` apply.
"""
from __future__ import annotations

from .dn import PM, a_even
from .engine import RelationSpec, Window
from .expr import ZERO_EXPR, Br, Gen, Named, lin, nested


def x(pm: int, i: int, r: int) -> Gen:
    return Gen("x+" if pm > 0 else "x-", i, r)


def h(i: int, r: int) -> Gen:
    return Gen("h", i, r)


def h_exists(n: int, i: int, r: int) -> bool:
    return (1 <= i <= n - 1 and r in (0, 1)) or (i in (0, n) and r == 0)


def _doms(n: int, w: Window) -> dict:
    lv = range(min(1, w.rmax) + 1)
    return {"i": range(n + 1), "j": range(n + 1), "r": lv, "s": lv, "pm": PM,
            "t": range(-w.rmax, w.rmax + 1)}


def _rel(id_, text, variables, build, cond=None, corrected=None, note=""):
    return RelationSpec(id_, text, tuple(variables), _doms, build, cond or (lambda n, b: True),
                        corrected, note)


def _h_at_one(n, b):
    i = b["i"]
    lhs = Br(x(1, i, 1), x(-1, i, 0))
    if i == 0:
        return lhs, lin((-1, h(1, 1)))
    return lhs, lin((1, h(i, 1)))


def _h_at_one_fix(n, b):
    if b["i"] == 0:
        return Br(x(1, 0, 1), x(-1, 0, 0)), lin((1, h(1, 1)))
    return _h_at_one(n, b)


def _clash(n, b):
    # printed clause "h_{n-1,1} if i=1", read as written
    return Br(x(1, 1, 1), x(-1, 1, 0)), lin((1, h(n - 1, 1)))


def _clash_fix(n, b):
    return Br(x(1, n, 1), x(-1, n, 0)), lin((1, h(n - 1, 1)))


def _et(n, b):
    u = b["t"]
    et = Named("Et", (u,))
    return Br(x(1, 1, 1), Br(x(-1, 1, 0), et)) - Br(x(1, 1, 0), Br(x(-1, 1, 1), et)), ZERO_EXPR


def dfin_relations(n: int) -> list:
    return [
        _rel("dfin1", "[h_{i,r},h_{j,s}] = 0", "ijrs",
             lambda n, b: (Br(h(b["i"], b["r"]), h(b["j"], b["s"])), ZERO_EXPR),
             lambda n, b: h_exists(n, b["i"], b["r"]) and h_exists(n, b["j"], b["s"])),
        _rel("dfin2", "[h_{i,0},x^pm_{j,0}] = pm a^0_{i,j} x^pm_{j,0}", ("i", "j", "pm"),
             lambda n, b: (Br(h(b["i"], 0), x(b["pm"], b["j"], 0)),
                           lin((b["pm"] * a_even(n, b["i"], b["j"]), x(b["pm"], b["j"], 0))))),
        _rel("dfin3", "[x^+_{i,0},x^-_{j,0}] = delta_{i,j} h_{i,0}", "ij",
             lambda n, b: (Br(x(1, b["i"], 0), x(-1, b["j"], 0)),
                           lin((1, h(b["i"], 0))) if b["i"] == b["j"] else ZERO_EXPR)),
        _rel("dfin4", "[x^+_{i,1},x^-_{i,0}] = h_{i,1} (1<=i<=n-1), -h_{1,1} (i=0)", "i",
             _h_at_one, lambda n, b: b["i"] <= n - 1, _h_at_one_fix,
             "i=0: the right side is +h_{1,1}, not -h_{1,1}"),
        _rel("dfin4b", "[x^+_{1,1},x^-_{1,0}] = h_{n-1,1} (clause printed with i=1)", (), _clash,
             corrected=_clash_fix,
             note="the clause keyed on i=1 clashes with the generic clause; read with i=n it holds"),
        _rel("dfin5", "[x^pm_{i,1},x^pm_{i,0}] = 0", ("i", "pm"),
             lambda n, b: (Br(x(b["pm"], b["i"], 1), x(b["pm"], b["i"], 0)), ZERO_EXPR)),
        _rel("dfin6", "[x^pm_{i,0},x^pm_{j,0}] = 0 if a^0_{i,j} = 0", ("i", "j", "pm"),
             lambda n, b: (Br(x(b["pm"], b["i"], 0), x(b["pm"], b["j"], 0)), ZERO_EXPR),
             lambda n, b: b["i"] != b["j"] and a_even(n, b["i"], b["j"]) == 0),
        _rel("dfin7", "[x^pm_{i,0},[x^pm_{i,0},x^pm_{j,0}]] = 0 if a^0_{i,j} = -1", ("i", "j", "pm"),
             lambda n, b: (nested(x(b["pm"], b["i"], 0), x(b["pm"], b["i"], 0), x(b["pm"], b["j"], 0)),
                           ZERO_EXPR),
             lambda n, b: a_even(n, b["i"], b["j"]) == -1),
        _rel("dfin8", "[[x^+_{n-1,1},x^-_{n-1,1}],x^pm_{n,0}] = 0", ("pm",),
             lambda n, b: (Br(Br(x(1, n - 1, 1), x(-1, n - 1, 1)), x(b["pm"], n, 0)), ZERO_EXPR)),
        _rel("dfin9", "[[x^+_{0,1},x^-_{0,1}],x^pm_{1,0}] = 0", ("pm",),
             lambda n, b: (Br(Br(x(1, 0, 1), x(-1, 0, 1)), x(b["pm"], 1, 0)), ZERO_EXPR)),
        _rel("dfin10", "[x^+_{1,1},[x^-_{1,0},(E11-E22)t^u]] - [x^+_{1,0},[x^-_{1,1},(E11-E22)t^u]] = 0",
             ("t",), _et),
    ]


__all__ = ["x", "h", "h_exists", "dfin_relations"]
