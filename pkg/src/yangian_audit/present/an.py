"""The presentation A(n) of the universal central extension of sl(n)[u^{+-1}, v]."""
from __future__ import annotations

from ..coeff import ONE
from ..loop import CenterElement, LoopElement, LoopModel
from .engine import Assignment, RelationSpec, Window
from .expr import ZERO_EXPR, Br, Gen, lin, nested

PM = (1, -1)


def x(pm: int, i: int, r: int) -> Gen:
    return Gen("x+" if pm > 0 else "x-", i, r)


def h(i: int, r: int) -> Gen:
    return Gen("h", i, r)


def cartan_a(n: int, i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1 or {i, j} == {0, n - 1}:
        return -1
    return 0


def iota_image(g: Gen, n: int) -> LoopElement | None:
    i, r = g.index, g.level
    if not 0 <= i <= n - 1 or r < 0:
        return None
    E = LoopElement.unit
    if g.family == "x+":
        return E(n, 1, 1, r) if i == 0 else E(i, i + 1, 0, r)
    if g.family == "x-":
        return E(1, n, -1, r) if i == 0 else E(i + 1, i, 0, r)
    if g.family == "h":
        if i:
            return E(i, i, 0, r) - E(i + 1, i + 1, 0, r)
        return E(n, n, 0, r) - E(1, 1, 0, r) + LoopElement.central(CenterElement(du={r: ONE}))
    return None


def iota_assignment(n: int) -> Assignment:
    return Assignment("iota", LoopModel(central=True), lambda g: iota_image(g, n))


def _doms(n: int, w: Window) -> dict:
    return {"i": range(n), "j": range(n), "r": range(w.rmax + 1), "u": range(w.rmax + 1),
            "s": range(w.smax + 1), "pm": PM}


def _rel(id_, text, variables, build, cond=None):
    return RelationSpec(id_, text, tuple(variables), _doms, build, cond or (lambda n, b: True))


def _serre(n, b):
    i, j, r1, r2, s, pm = b["i"], b["j"], b["r"], b["u"], b["s"], b["pm"]
    if cartan_a(n, i, j) == 0:
        return Br(x(pm, i, r1), x(pm, j, s)), ZERO_EXPR
    return (nested(x(pm, i, r1), x(pm, i, r2), x(pm, j, s))
            + nested(x(pm, i, r2), x(pm, i, r1), x(pm, j, s))), ZERO_EXPR


def a_relations(n: int) -> list:
    return [
        _rel("Eq2.1", "[h_{i,r},h_{j,s}] = 0", "ijrs",
             lambda n, b: (Br(h(b["i"], b["r"]), h(b["j"], b["s"])), ZERO_EXPR)),
        _rel("Eq2.2", "[x^+_{i,r},x^-_{j,s}] = delta_{i,j} h_{i,r+s}", "ijrs",
             lambda n, b: (Br(x(1, b["i"], b["r"]), x(-1, b["j"], b["s"])),
                           lin((1, h(b["i"], b["r"] + b["s"]))) if b["i"] == b["j"] else ZERO_EXPR)),
        _rel("Eq2.4", "[h_{i,0},x^pm_{j,r}] = pm a_{i,j} x^pm_{j,r}", ("i", "j", "r", "pm"),
             lambda n, b: (Br(h(b["i"], 0), x(b["pm"], b["j"], b["r"])),
                           lin((b["pm"] * cartan_a(n, b["i"], b["j"]), x(b["pm"], b["j"], b["r"]))))),
        _rel("Eq2.5", "[h_{i,r+1},x^pm_{j,s}] = [h_{i,r},x^pm_{j,s+1}]", ("i", "j", "r", "s", "pm"),
             lambda n, b: (Br(h(b["i"], b["r"] + 1), x(b["pm"], b["j"], b["s"])),
                           Br(h(b["i"], b["r"]), x(b["pm"], b["j"], b["s"] + 1)))),
        _rel("Eq2.8", "[x^pm_{i,r+1},x^pm_{j,s}] = [x^pm_{i,r},x^pm_{j,s+1}]", ("i", "j", "r", "s", "pm"),
             lambda n, b: (Br(x(b["pm"], b["i"], b["r"] + 1), x(b["pm"], b["j"], b["s"])),
                           Br(x(b["pm"], b["i"], b["r"]), x(b["pm"], b["j"], b["s"] + 1)))),
        _rel("Eq2.10", "symmetrized Serre relation for i != j", ("i", "j", "r", "u", "s", "pm"), _serre,
             lambda n, b: b["i"] != b["j"] and (cartan_a(n, b["i"], b["j"]) == -1 or b["u"] == 0)),
    ]


__all__ = ["x", "h", "cartan_a", "iota_image", "iota_assignment", "a_relations"]
