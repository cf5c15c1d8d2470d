"""Identity chain behind the injectivity of phi, checked in the Kassel model."""
from __future__ import annotations

from fractions import Fraction

from ..loop import CenterElement, LoopElement, LoopModel, bracket, f_elem
from .dn import loop_image
from .engine import AuditRecord, AuditReport
from .expr import Gen


def _xp(i: int, r: int, n: int) -> LoopElement:
    return loop_image(Gen("X+", i, r), n, True)


def _h(i: int, r: int, n: int) -> LoopElement:
    return loop_image(Gen("H", i, r), n, True, extend_h=True)


def _br(a, b):
    return bracket(a, b, central=True)


def partner(i: int, n: int) -> tuple:
    """Index pair ``(p, q)`` of the f element paired with ``X^+_i`` in a(r,k)."""
    return (-n, n - 1) if i == n else (i + 1, i)


_NOTES = {
    ("eq92", "literal"): "second term must be 2[X_s, f^(v+1)], not 2[X_(s+1), f^(v+1)]",
    ("eq93", "literal"): "X_(0,s) carries (-1)^s; the argument needs the unsigned f^(1,s)_(-2,1)",
    ("eq93.central", "literal"): "X_(0,s) carries (-1)^s; the argument needs the unsigned f^(1,s)_(-2,1)",
    ("eq93.expansion", "literal"): "X_(0,s) carries (-1)^s; the argument needs the unsigned f^(1,s)_(-2,1)",
    ("odd_degeneration", "literal"): "compares elements of different v-degree",
    ("odd_degeneration", "spanning-set"): "vanishes only for odd k (central part (1+(-1)^k)u^r v^(k-1)dv)",
}


def _rec(report, rid, variant, b, res):
    zero = res.is_zero()
    note = None if zero else _NOTES.get((rid, variant))
    report.records.append(AuditRecord(rid, variant, b, res, zero, LoopModel.describe(res), note))


def check_h0_center(n: int, rmax: int, report: AuditReport) -> None:
    """``[X^+_{0,r}, X^-_{0,s}] = phi(H_{0,r+s})`` needs the ``2u^{-1}v^{r+s}du`` term."""
    for r in range(rmax + 1):
        for s in range(rmax + 1):
            if (r + s) % 2:
                continue
            lhs = _br(_xp(0, r, n), loop_image(Gen("X-", 0, s), n, True))
            h = loop_image(Gen("H", 0, r + s), n, True)
            _rec(report, "h0_center", "literal", {"r": r, "s": s}, lhs - h)
            bare = h.drop_center()
            res = lhs - bare
            _rec(report, "h0_center.required", "literal", {"r": r, "s": s},
                 LoopElement() if res.body == {} and res.center == CenterElement(du={r + s: h.center.du[r + s]})
                 else res)


def check_eq92(n: int, rmax: int, kmax: int, report: AuditReport) -> None:
    for i in range(1, n):
        p, q = partner(i, n)
        for r in range(1, rmax + 1):
            for s in range(kmax + 1):
                for v in range(kmax + 1):
                    b = {"i": i, "r": r, "s": s, "v": v}
                    X = lambda m: _xp(i, m, n)
                    f = lambda m: f_elem(p, q, r, m)
                    diff = _br(X(s), f(v)) - _br(X(0), f(s + v))
                    _rec(report, "eq92.central", "literal", b, diff.drop_center())
                    tail = _br(X(1), f(s + v)).scale(-2) + _br(X(0), f(s + v + 1)).scale(2)
                    lit = _br(X(s + 1), f(v)).scale(2) - _br(X(s + 1), f(v + 1)).scale(2) + tail
                    fix = _br(X(s + 1), f(v)).scale(2) - _br(X(s), f(v + 1)).scale(2) + tail
                    _rec(report, "eq92", "literal", b, lit)
                    _rec(report, "eq92", "corrected", b, fix)
                    hb = _h(i, 1, n)
                    expand = _br(hb, _br(X(s), f(v))) - _br(hb, _br(X(0), f(s + v)))
                    _rec(report, "eq92.expansion", "literal", b, expand - fix)


def check_eq93(n: int, rmax: int, kmax: int, report: AuditReport) -> None:
    """Literal: ``X_{0,s}`` is ``phi(X^+_{0,s})``.  Corrected: the unsigned
    ``f^{1,s}_{-2,1}``, which differs from it by ``(-1)^s``."""
    for r in range(1, rmax + 1):
        for s in range(kmax + 1):
            for v in range(kmax + 1):
                b = {"r": r, "s": s, "v": v}
                f = lambda m: f_elem(1, -2, r - 1, m)
                hb = _h(0, 1, n)
                for variant, X in (("literal", lambda m: _xp(0, m, n)),
                                   ("corrected", lambda m: f_elem(-2, 1, 1, m))):
                    diff = _br(X(s), f(v)) - _br(X(0), f(s + v))
                    _rec(report, "eq93.central", variant, b, diff.drop_center())
                    expr = (_br(X(s + 1), f(v)).scale(2) - _br(X(s), f(v + 1)).scale(2)
                            - _br(X(1), f(s + v)).scale(2) + _br(X(0), f(s + v + 1)).scale(2))
                    _rec(report, "eq93", variant, b, expr)
                    expand = _br(hb, _br(X(s), f(v))) - _br(hb, _br(X(0), f(s + v)))
                    _rec(report, "eq93.expansion", variant, b, expand - expr)


def check_eq96(n: int, umax: int, rmax: int, report: AuditReport) -> None:
    for u in range(-umax, umax + 1):
        for r in range(1, rmax + 1):
            b = {"u": u, "r": r}
            lo, hi = 2 * r - 1, 2 * r + 1
            fm = lambda m: f_elem(-n, n - 1, u, m)
            fd = lambda m: f_elem(-(n - 1), n - 1, u, m)
            fn = lambda m: f_elem(n, n - 1, u, m)
            lhs = _br(_xp(n, 2, n), fm(lo)) - _br(_xp(n, 0, n), fm(hi))
            rhs = _br(_xp(n - 1, 0, n), fn(hi)) - _br(_xp(n - 1, 2, n), fn(lo))
            _rec(report, "eq96", "literal", b, lhs - rhs)
            # the two three-step chains
            c1 = [_br(_xp(n, 2, n), fm(lo)),
                  _br(_xp(n, 2, n), _br(_xp(n - 1, 0, n), fd(lo))).scale(Fraction(-1, 2)),
                  _br(_xp(n - 1, 0, n), _br(_xp(n, 2, n), fd(lo))).scale(Fraction(-1, 2)),
                  _br(_xp(n - 1, 0, n), fn(hi))]
            c2 = [_br(_xp(n, 0, n), fm(hi)),
                  _br(_xp(n, 0, n), _br(_xp(n - 1, 2, n), fd(lo))).scale(Fraction(-1, 2)),
                  _br(_xp(n - 1, 2, n), _br(_xp(n, 0, n), fd(lo))).scale(Fraction(-1, 2)),
                  _br(_xp(n - 1, 2, n), fn(lo))]
            for name, chain in (("eq96.chain1", c1), ("eq96.chain2", c2)):
                for step in range(3):
                    _rec(report, name, "literal", {**b, "step": step + 1}, chain[step] - chain[step + 1])


def a_rk_images(n: int, r: int, k: int) -> list:
    """phi-images of the spanning set of the degree ``(r delta, k)`` space."""
    out = []
    for i in range(1, n + 1):
        p, q = partner(i, n)
        out.append((f"[X+_{i},0 f^{r},{k}_{p},{q}]", _br(_xp(i, 0, n), f_elem(p, q, r, k))))
    for s in (0, 1):
        if k - s >= 0:
            out.append((f"[X+_0,{s} f^{r - 1},{k - s}_1,-2]", _br(_xp(0, s, n), f_elem(1, -2, r - 1, k - s))))
    if k >= 1:
        out.append(("[X+_1,1 f^{r},{k-1}_2,1]-[X+_1,0 f^{r},{k}_2,1]",
                    _br(_xp(1, 1, n), f_elem(2, 1, r, k - 1)) - _br(_xp(1, 0, n), f_elem(2, 1, r, k))))
    return out


def _coords(x: LoopElement) -> dict:
    d = {("b",) + k: v.const_value() for k, v in x.body.items()}
    d.update({("du", s): v.const_value() for s, v in x.center.du.items()})
    d.update({("dv",) + k: v.const_value() for k, v in x.center.dv.items()})
    return d


def rank(elements) -> int:
    """Rank over Q of loop elements with constant coefficients."""
    rows = [_coords(x) for x in elements]
    keys = sorted({k for row in rows for k in row}, key=repr)
    mat = [[row.get(k, Fraction(0)) for k in keys] for row in rows]
    rk = 0
    for col in range(len(keys)):
        piv = next((i for i in range(rk, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        for i in range(len(mat)):
            if i != rk and mat[i][col]:
                fac = mat[i][col] / mat[rk][col]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[rk])]
        rk += 1
    return rk


def check_odd_degeneration(n: int, rmax: int, kmax: int, report: AuditReport) -> None:
    """Printed form ``[X^+_{1,1}, f^{r,k}] - [X^+_{1,0}, f^{r,k}]`` and the form
    ``[X^+_{1,1}, f^{r,k-1}] - [X^+_{1,0}, f^{r,k}]`` used in the spanning set."""
    for r in range(1, rmax + 1):
        for k in range(kmax + 1):
            b = {"r": r, "k": k}
            lit = _br(_xp(1, 1, n), f_elem(2, 1, r, k)) - _br(_xp(1, 0, n), f_elem(2, 1, r, k))
            _rec(report, "odd_degeneration", "literal", b, lit)
            if k >= 1:
                alt = _br(_xp(1, 1, n), f_elem(2, 1, r, k - 1)) - _br(_xp(1, 0, n), f_elem(2, 1, r, k))
                _rec(report, "odd_degeneration", "spanning-set", b, alt)


def verify_section4(n: int, r_max: int = 2, k_max: int = 2) -> AuditReport:
    report = AuditReport("section4", "phi", n)
    check_h0_center(n, r_max, report)
    check_eq92(n, r_max, k_max, report)
    check_eq93(n, r_max, k_max, report)
    check_eq96(n, r_max, r_max, report)
    check_odd_degeneration(n, r_max, k_max, report)
    report.sort()
    report.ranks = {(r, k): (len(imgs), rank([x for _, x in imgs]))
                    for r in range(1, r_max + 1) for k in range(k_max + 1)
                    for imgs in [a_rk_images(n, r, k)]}
    return report


__all__ = ["verify_section4", "a_rk_images", "rank", "partner"]
