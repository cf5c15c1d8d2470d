"""Braid-group automorphisms ``tau_i = exp(ad X^+) exp(-ad X^-) exp(ad X^+)``
realized in the loop model, and the tables of their action on ``f`` elements."""
from __future__ import annotations

from fractions import Fraction

from ..loop import LoopElement, bracket, f_elem
from .dn import loop_image
from .expr import Gen


class NotNilpotentError(ValueError):
    def __init__(self):
        super().__init__("not-nilpotent-within-bound")


def exp_ad(a: LoopElement, x: LoopElement, sign: int = 1, nmax: int = 8,
           central: bool = False) -> LoopElement:
    total = x
    term = x
    for k in range(1, nmax + 1):
        term = bracket(a, term, central=central).scale(Fraction(sign, k))
        if term.is_zero():
            return total
        total = total + term
    raise NotNilpotentError()


def expad_auto(i: int, x: LoopElement, n: int, nmax: int = 8, central: bool = False) -> LoopElement:
    """``tau_i(x)`` with ``X^pm_{i,0}`` taken through pi (or phi when ``central``)."""
    if not 0 <= i <= n:
        raise ValueError(f"node {i} out of range")
    xp = loop_image(Gen("X+", i, 0), n, central)
    xm = loop_image(Gen("X-", i, 0), n, central)
    y = exp_ad(xp, x, 1, nmax, central)
    y = exp_ad(xm, y, -1, nmax, central)
    return exp_ad(xp, y, 1, nmax, central)


def as_multiple(x: LoopElement, p: int, q: int, r: int, s: int):
    """``c`` with ``x == c * f^{r,s}_{p,q}``, else ``None``."""
    t = f_elem(p, q, r, s)
    if t.is_zero():
        return None
    key = (p, q, r, s)
    if key not in t.body:
        return None
    c = x.body.get(key)
    if c is None:
        return None
    scale = c.const_value() / t.body[key].const_value()
    return scale if x == t.scale(scale) else None


def identify(x: LoopElement):
    """Write ``x`` as ``c * f^{r,s}_{p,q}`` with ``p > 0`` or ``q > 0`` when possible."""
    for (p, q, r, s) in sorted(x.body):
        if p == q or (p < 0 and q < 0):
            continue
        c = as_multiple(x, p, q, r, s)
        if c is not None:
            return c, (p, q, r, s)
    return None


__all__ = ["NotNilpotentError", "exp_ad", "expad_auto", "as_multiple", "identify"]


# action tables on f^{r,s}_{j,k} ----------------------------------------------
#
# A row is (label, cond(j, k, a, b), image(j, k, r, s, a, b) -> (coeff, p, q, r')).
# ``a, b`` are the two indices moved by the node (i, i+1), (n-1, n) or (1, 2).

def _c(sign):
    return lambda r, s: sign


def _alt_r(sign):
    return lambda r, s: sign * (1 if r % 2 == 0 else -1)


def _alt_s(sign):
    return lambda r, s: sign * (1 if s % 2 == 0 else -1)


def _row(label, cond, coeff, p, q, dr=lambda: 0):
    def image(j, k, r, s, a, b):
        return coeff(r, s), p(j, k, a, b), q(j, k, a, b), r + dr()
    return label, cond, image


J = lambda j, k, a, b: j
K = lambda j, k, a, b: k


def _const(name):
    return {
        "a": lambda j, k, a, b: a, "-a": lambda j, k, a, b: -a,
        "b": lambda j, k, a, b: b, "-b": lambda j, k, a, b: -b,
    }[name]


def _pairs(*ps):
    return lambda j, k, a, b: any((j, k) == tuple(_v(x, a, b) for x in p) for p in ps)


def _v(x, a, b):
    return {"a": a, "-a": -a, "b": b, "-b": -b}[x]


def _jk(jv, kv_not=None):
    def cond(j, k, a, b):
        if j != _v(jv, a, b):
            return False
        return kv_not is None or k not in tuple(_v(x, a, b) for x in kv_not)
    return cond


def _kj(kv, jv_not=None):
    def cond(j, k, a, b):
        if k != _v(kv, a, b):
            return False
        return jv_not is None or j not in tuple(_v(x, a, b) for x in jv_not)
    return cond


_ALWAYS = lambda j, k, a, b: True


def _shift(d):
    return lambda: d


def _rows_generic(alt, row5_p, row3_pairs):
    """Rows shared by the tables of tau_i (1<=i<=n-1)."""
    return [
        _row("1", _pairs(("a", "b")), _c(-1), K, J),
        _row("2", _pairs(("b", "a")), _c(-1), K, J),
        _row("3", _pairs(*row3_pairs[0]), alt(1), J, K),
        _row("4", _pairs(*row3_pairs[1]), alt(1), J, K),
        _row("5", _jk("a", ("b", "-b")), _c(-1), row5_p, K),
        _row("6", _jk("-a", ("b",)), _c(-1), _const("-b"), K),
        _row("7", _jk("b", ("a", "-a")), _c(1), _const("a"), K),
        _row("8", _jk("-b", ("a", "-a")), _c(1), _const("-a"), K),
        _row("9", _kj("a", ("b", "-b")), _c(-1), J, _const("b")),
        _row("10", _kj("-a", ("b",)), _c(-1), J, _const("-b")),
        _row("11", _kj("b", ("a",)), _c(1), J, _const("a")),
        _row("12", _kj("-b", ("a",)), _c(1), J, _const("-a")),
        _row("otherwise", _ALWAYS, _c(1), J, K),
    ]


def _rows_n(alt):
    return [
        _row("1", _pairs(("a", "b")), alt(1), J, K),
        _row("2", _pairs(("b", "a")), alt(1), J, K),
        _row("3", _pairs(("a", "-b"), ("b", "-a")), _c(-1), K, J),
        _row("4", _pairs(("-b", "a"), ("-a", "b")), _c(-1), K, J),
        _row("5", _jk("a", ("b", "-b")), _c(-1), _const("-b"), K),
        _row("6", _jk("-a", ("b",)), _c(-1), _const("b"), K),
        _row("7", _jk("b", ("a", "-a")), _c(1), _const("-a"), K),
        _row("8", _jk("-b", ("a", "-a")), _c(1), _const("a"), K),
        _row("9", _kj("a", ("b", "-b")), _c(-1), J, _const("-b")),
        _row("10", _kj("-a", ("b",)), _c(-1), J, _const("b")),
        _row("11", _kj("b", ("a",)), _c(1), J, _const("-a")),
        _row("12", _kj("-b", ("a",)), _c(1), J, _const("a")),
        _row("otherwise", _ALWAYS, _c(1), J, K),
    ]


def _rows_0(alt, lit):
    # printed: rows 3/4 shift by -2/+2, rows 5/6 by +2/-2 with target index j
    d3, d4 = (-2, 2) if lit else (2, -2)
    d5, d6 = (2, -2) if lit else (1, -1)
    row3 = (("a", "-b"), ("a", "-b")) if lit else (("a", "-b"), ("b", "-a"))
    return [
        _row("1", _pairs(("a", "b")), alt(1), J, K),
        _row("2", _pairs(("b", "a")), alt(1), J, K),
        _row("3", _pairs(*row3), _c(-1), K, J, _shift(d3)),
        _row("4", _pairs(("-b", "a"), ("-a", "b")), _c(-1), K, J, _shift(d4)),
        _row("5", _jk("a", ("b", "-b")), _c(1), _const("-b"), J if lit else K, _shift(d5)),
        _row("6", _jk("-a", ("b",)), _c(1), _const("b"), K, _shift(d6)),
        _row("7", _jk("b", ("a", "-a")), _c(-1), _const("-a"), K, _shift(1)),
        _row("8", _jk("-b", ("a",)), _c(-1), _const("a"), K, _shift(-1)),
        _row("9", _kj("a", ("b", "-b")), _c(1), J, _const("-b"), _shift(-1)),
        _row("10", _kj("-a", ("b",)), _c(1), J, _const("b"), _shift(1)),
        _row("11", _kj("b", ("a",)), _c(-1), J, _const("-a"), _shift(-1)),
        _row("12", _kj("-b", ("a",)), _c(-1), J, _const("a"), _shift(1)),
        _row("otherwise", _ALWAYS, _c(1), J, K),
    ]


def action_table(kind: str, literal: bool) -> list:
    """Rows for ``kind`` in {"i", "n", "0"}; ``literal`` selects the printed table."""
    alt = _alt_r if literal else _alt_s
    if kind == "i":
        if literal:
            pairs = ((("a", "-b"), ("-b", "a")), (("-b", "a"), ("-a", "b")))
            return _rows_generic(alt, J, pairs)
        pairs = ((("a", "-b"), ("-b", "a")), (("-a", "b"), ("b", "-a")))
        return _rows_generic(alt, _const("b"), pairs)
    if kind == "n":
        return _rows_n(alt)
    if kind == "0":
        return _rows_0(alt, literal)
    raise ValueError(kind)


def node_pair(node: int, n: int) -> tuple:
    if node == 0:
        return "0", 1, 2
    if node == n:
        return "n", n - 1, n
    return "i", node, node + 1


def predict(node: int, n: int, j: int, k: int, r: int, s: int, literal: bool):
    kind, a, b = node_pair(node, n)
    for label, cond, image in action_table(kind, literal):
        if cond(j, k, a, b):
            c, p, q, r2 = image(j, k, r, s, a, b)
            return label, f_elem(p, q, r2, s, c)
    raise AssertionError("the 'otherwise' row always applies")


def table_pairs(n: int):
    """Index pairs covered by the tables: ``j != +-k`` and ``j`` or ``k`` positive."""
    idx = [i for i in range(-n, n + 1) if i]
    return [(j, k) for j in idx for k in idx if abs(j) != abs(k) and (j > 0 or k > 0)]


def verify_cor25(n: int, rmax: int = 1, smax: int = 1, nodes=None):
    """Check every table row against :func:`expad_auto` on ``f`` elements."""
    from .engine import AuditRecord, AuditReport
    from ..loop import LoopModel
    nodes = list(range(n + 1)) if nodes is None else list(nodes)
    report = AuditReport("cor25", "pi", n)
    for node in nodes:
        kind = node_pair(node, n)[0]
        for j, k in table_pairs(n):
            for r in range(-rmax, rmax + 1):
                for s in range(smax + 1):
                    actual = expad_auto(node, f_elem(j, k, r, s), n)
                    for variant, lit in (("literal", True), ("corrected", False)):
                        label, want = predict(node, n, j, k, r, s, lit)
                        res = actual - want
                        rid = f"cor25.tau_{kind}.row{label}" if label != "otherwise" else f"cor25.tau_{kind}.otherwise"
                        report.records.append(AuditRecord(
                            rid, variant, {"node": node, "j": j, "k": k, "r": r, "s": s}, res,
                            res.is_zero(), LoopModel.describe(res)))
    return report.sort()


def tau_sign_check(n: int, rmax: int = 2) -> dict:
    """``tau_{n-1}(X^pm_{n,2r+1}) = -X^pm_{n,2r+1}`` for ``r <= rmax``."""
    out = {}
    for pm in ("X+", "X-"):
        for r in range(rmax + 1):
            x = loop_image(Gen(pm, n, 2 * r + 1), n, False)
            out[(pm, 2 * r + 1)] = (expad_auto(n - 1, x, n) + x).is_zero()
    return out


__all__ += ["action_table", "predict", "verify_cor25", "tau_sign_check", "table_pairs", "node_pair"]
