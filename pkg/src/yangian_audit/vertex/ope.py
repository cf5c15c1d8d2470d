"""Operator product identities among W1, W2 recomputed from scratch.

Each identity is a pair of builders ``lhs(n, b, trace)`` / ``rhs(n, b, trace)``
evaluated per index instance; residuals are ``lhs - rhs`` as VAStates whose
coefficients are polynomials in alpha.  Variants:

* ``literal``: the printed right side;
* ``corrected``: a repaired right side, where the printed one fails;
* ``bare-kappa``: the printed right side, computed without the trace term of
  the level (reported for the quadratic block only).
"""
from __future__ import annotations

import itertools
import multiprocessing as mp
from dataclasses import dataclass
from typing import Callable

from ..coeff import ALPHA
from ..present.engine import AuditRecord, AuditReport, worker_count
from .core import VAState, W, algebra, index_set, nth_product, translate

BLOCKS = ("w1w1", "w1w2", "w2w2", "corollary")
W2W2_PAIRS = ((1, 2), (1, 3), (2, 3))


def d(a, b) -> int:
    return int(a == b)


def _w1(n, t, i, j):
    return W(1, i, j, n, t)


def _w2(n, t, i, j):
    return W(2, i, j, n, t)


def _vac(n, t, c) -> VAState:
    return VAState.vacuum(algebra(n, t)).scale(c)


def _zero(n, t) -> VAState:
    return VAState(algebra(n, t))


def _nm(n, t, i, j) -> VAState:
    return _w1(n, t, i, j)


def _p(a, b):
    return nth_product(a, -1, b)


def _sum(n, t, *terms) -> VAState:
    out = _zero(n, t)
    for c, x in terms:
        if c:
            out = out + x.scale(c)
    return out


@dataclass(frozen=True)
class Identity:
    id: str
    block: str
    lhs: Callable
    rhs: Callable
    corrected: Callable | None = None
    note: str = ""
    bare_kappa: bool = False


# W1 with W1 ------------------------------------------------------------------

def _ope11_rhs(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _sum(n, t, (d(j, p), _w1(n, t, i, q)), (-d(i, q), _w1(n, t, p, j)),
                (-d(-i, p), _w1(n, t, -j, q)), (d(-j, q), _w1(n, t, p, -i)))


def _prod(m_of, left, right):
    def f(n, b, t):
        return nth_product(left(n, t, b), m_of(b), right(n, t, b))
    return f


_W1ij = lambda n, t, b: _w1(n, t, b["i"], b["j"])
_W1pq = lambda n, t, b: _w1(n, t, b["p"], b["q"])
_W2pq = lambda n, t, b: _w2(n, t, b["p"], b["q"])


def _ope21_rhs(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _vac(n, t, 2 * ALPHA * d(i, q) * d(j, p))


def _ope21_fix(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _vac(n, t, 2 * ALPHA * (d(i, q) * d(j, p) - d(i, -p) * d(j, -q)))


# W1 with W2 ------------------------------------------------------------------

def _ope1_rhs(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _sum(n, t, (d(j, -q), _w2(n, t, p, -i)), (-d(i, -p), _w2(n, t, -j, q)),
                (-d(i, q), _w2(n, t, p, j)), (d(p, j), _w2(n, t, i, q)))


def _ope2_rhs(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _sum(n, t, ((ALPHA - 1) * d(i, -p), _w1(n, t, -q, j)),
                (-(ALPHA - 1) * d(j, p), _w1(n, t, -q, -i)),
                (d(i, q), _w1(n, t, -j, -p)), (-d(-j, q), _w1(n, t, i, -p)))


def _ope3_rhs(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _vac(n, t, ALPHA * (ALPHA + 1) * (d(i, q) * d(j, p) - d(q, -j) * d(i, -p)))


def _ope3_fix(n, b, t):
    i, j, p, q = b["i"], b["j"], b["p"], b["q"]
    return _vac(n, t, 2 * ALPHA * ALPHA * (d(i, q) * d(j, p) - d(q, -j) * d(i, -p)))


# W2 with W2 (n = 4) ----------------------------------------------------------

def _ope4_rhs(n, b, t):
    i, j = b["i"], b["j"]
    w1 = lambda a, c: _w1(n, t, a, c)
    w2 = lambda a, c: _w2(n, t, a, c)
    D = translate
    a = ALPHA
    return _sum(n, t, (a, D(w1(j, j), 2)), (-2, D(w2(j, j))),
                (-1, _p(w1(i, j), w2(j, i))), (1, _p(w1(j, i), w2(i, j))),
                (-1, _p(w1(i, -j), w2(-j, i))), (-1, _p(w1(-i, j), w2(j, -i))),
                (a - 1, _p(w1(i, j), D(w1(j, i)))), (-1, _p(w1(j, i), D(w1(i, j)))),
                (a - 1, _p(w1(i, -j), D(w1(-j, i)))), (a - 1, _p(w1(-i, j), D(w1(j, -i)))))


def _ope5_rhs(n, b, t):
    i, j = b["i"], b["j"]
    w1 = lambda a, c: _w1(n, t, a, c)
    w2 = lambda a, c: _w2(n, t, a, c)
    a = ALPHA
    return _sum(n, t, (2, translate(w1(i, i))), (a, translate(w1(j, j))),
                (-2, w2(i, i)), (-2, w2(j, j)),
                (a - 2, _p(w1(i, j), w1(j, i))), (a - 2, _p(w1(i, -j), w1(-j, i))))


def _ope6_rhs(n, b, t):
    i, j = b["i"], b["j"]
    w1 = lambda a, c: _w1(n, t, a, c)
    w2 = lambda a, c: _w2(n, t, a, c)
    D = translate
    a = ALPHA
    return _sum(n, t, (a, D(w1(j, j), 2)), (-a, D(w2(j, j))),
                (-1, _p(w1(j, j), w2(i, i))), (-1, _p(w1(i, i), w2(j, j))),
                (-1, _p(w1(i, j), w2(j, i))), (-1, _p(w1(j, i), w2(i, j))),
                (1, _p(w1(j, j), D(w1(i, i)))), (1, _p(w1(i, i), D(w1(j, j)))),
                (1, _p(w1(i, j), D(w1(j, i)))), (1, _p(w1(j, i), D(w1(i, j)))))


def _ope7_rhs(n, b, t):
    i, j = b["i"], b["j"]
    w1 = lambda a, c: _w1(n, t, a, c)
    w2 = lambda a, c: _w2(n, t, a, c)
    a = ALPHA
    return _sum(n, t, (a - 1, translate(w1(i, i))), (1 + 2 * a - a * a, translate(w1(j, j))),
                (-a, w2(i, i)), (-a, w2(j, j)),
                (2 - a, _p(w1(i, i), w1(j, j))), (2 - a, _p(w1(i, j), w1(j, i))))


def _w2w2(m, left, right):
    def f(n, b, t):
        i, j = b["i"], b["j"]
        (a1, b1), (a2, b2) = left(i, j), right(i, j)
        return nth_product(_w2(n, t, a1, b1), m, _w2(n, t, a2, b2))
    return f


# corollary -------------------------------------------------------------------

def _cor(m):
    def f(n, b, t):
        i, j = b["i"], b["j"]
        inner = nth_product(_w2(n, t, i, -j), m, _w2(n, t, -j, i))
        return nth_product(_w1(n, t, i, j), 0, inner)
    return f


def _cor1_rhs(n, b, t):
    i, j = b["i"], b["j"]
    w1 = lambda a, c: _w1(n, t, a, c)
    w2 = lambda a, c: _w2(n, t, a, c)
    dw1 = w1(i, i) - w1(j, j)
    a = ALPHA
    return _sum(n, t, (a, translate(w1(i, j), 2)), (-a, translate(w2(i, j))),
                (-2, _p(w1(i, j), w2(i, i) - w2(j, j))), (-2, _p(dw1, w2(i, j))),
                (2, _p(w1(i, j), translate(dw1))), (2, _p(dw1, translate(w1(i, j)))))


def _cor2_rhs(n, b, t):
    i, j = b["i"], b["j"]
    w1 = lambda a, c: _w1(n, t, a, c)
    return _sum(n, t, (4 - ALPHA * ALPHA, translate(w1(i, j))),
                (2 * (2 - ALPHA), _p(w1(i, j), w1(i, i) - w1(j, j))))


OPE21_NOTE = ("W1_{p,q} = -W1_{-q,-p} forces the extra term -2 alpha d_{i,-p} d_{j,-q}|0>")
OPE3_NOTE = ("constant is 2 alpha^2, consistent with the corrected (1)-product of W1 and "
             "W2_{i,j} = W2_{-j,-i} + alpha dW1_{i,j}")
LEVEL_NOTE = "holds only with the trace term d_ab d_cd in the level on g_0"


def identities() -> list:
    four = lambda b: b["r"]
    return [
        Identity("OPE1-1", "w1w1", _prod(lambda b: 0, _W1ij, _W1pq), _ope11_rhs),
        Identity("OPE2-1", "w1w1", _prod(lambda b: 1, _W1ij, _W1pq), _ope21_rhs, _ope21_fix, OPE21_NOTE),
        Identity("OPE2-3", "w1w1", _prod(four, _W1ij, _W1pq), lambda n, b, t: _zero(n, t)),
        Identity("OPE1", "w1w2", _prod(lambda b: 0, _W1ij, _W2pq), _ope1_rhs),
        Identity("OPE2", "w1w2", _prod(lambda b: 1, _W1ij, _W2pq), _ope2_rhs),
        Identity("OPE3", "w1w2", _prod(lambda b: 2, _W1ij, _W2pq), _ope3_rhs, _ope3_fix, OPE3_NOTE),
        Identity("OPE3.5", "w1w2", _prod(four, _W1ij, _W2pq), lambda n, b, t: _zero(n, t)),
        Identity("OPE4", "w2w2", _w2w2(0, lambda i, j: (i, i), lambda i, j: (j, j)), _ope4_rhs,
                 note=LEVEL_NOTE, bare_kappa=True),
        Identity("OPE5", "w2w2", _w2w2(1, lambda i, j: (i, i), lambda i, j: (j, j)), _ope5_rhs,
                 note=LEVEL_NOTE, bare_kappa=True),
        Identity("OPE6", "w2w2", _w2w2(0, lambda i, j: (i, -j), lambda i, j: (-j, i)), _ope6_rhs,
                 note=LEVEL_NOTE, bare_kappa=True),
        Identity("OPE7", "w2w2", _w2w2(1, lambda i, j: (i, -j), lambda i, j: (-j, i)), _ope7_rhs,
                 note=LEVEL_NOTE, bare_kappa=True),
        Identity("corollary1", "corollary", _cor(0), _cor1_rhs, note=LEVEL_NOTE, bare_kappa=True),
        Identity("corollary2", "corollary", _cor(1), _cor2_rhs, note=LEVEL_NOTE, bare_kappa=True),
    ]


def instances(ident: Identity, n: int, indices=None) -> list:
    """Index bindings for one identity.  ``indices`` restricts to one tuple."""
    idx = index_set(n)
    if ident.block in ("w1w1", "w1w2"):
        quads = [tuple(indices)] if indices else list(itertools.product(idx, repeat=4))
        if ident.id == "OPE2-3":
            rs = (2, 3, 4, 5)
        elif ident.id == "OPE3.5":
            rs = (3, 4, 5, 6)
        else:
            rs = (None,)
        out = []
        for q in quads:
            base = dict(zip("ijpq", q))
            out += [base if r is None else {**base, "r": r} for r in rs]
        return out
    pairs = [tuple(indices[:2])] if indices else list(W2W2_PAIRS)
    return [{"i": i, "j": j} for i, j in pairs]


def _check(ident: Identity, n: int, b: dict, variant: str) -> AuditRecord:
    t = variant != "bare-kappa"
    rhs = ident.corrected if variant == "corrected" else ident.rhs
    res = ident.lhs(n, b, t) - rhs(n, b, t)
    zero = res.is_zero()
    entry = ident.note if ident.note and (variant != "literal" or not zero) else None
    rid = ident.id
    if rid in ("OPE2-3", "OPE3.5") and b["r"] == (2 if rid == "OPE2-3" else 3):
        rid += ".boundary"
    return AuditRecord(rid, variant, dict(b), res, zero, res.describe(), entry)


_JOBS: list | None = None


def _run(k: int):
    ident, n, b, variant = _JOBS[k]
    return _check(ident, n, b, variant)


def verify_ope(block: str, n: int, indices=None, workers: int | None = None) -> AuditReport:
    """Recompute every identity of ``block`` and report residuals per instance."""
    global _JOBS
    block = block.lower()
    if block not in BLOCKS:
        raise ValueError(f"unknown block {block!r}; expected one of {BLOCKS}")
    if block in ("w2w2", "corollary") and n != 4:
        raise ValueError(f"block {block} is stated for n = 4 only")
    if indices is not None:
        if any(x not in index_set(n) for x in indices):
            raise ValueError(f"indices {indices} outside I_{n}")
        need = 4 if block in ("w1w1", "w1w2") else 2
        if len(indices) < need:
            raise ValueError(f"block {block} needs {need} indices")
    jobs = []
    for ident in identities():
        if ident.block != block:
            continue
        variants = ["literal"] + (["corrected"] if ident.corrected else []) + \
            (["bare-kappa"] if ident.bare_kappa else [])
        for b in instances(ident, n, indices):
            jobs += [(ident, n, b, v) for v in variants]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1 and "fork" in mp.get_all_start_methods():
        _JOBS = jobs
        try:
            with mp.get_context("fork").Pool(workers) as pool:
                recs = pool.map(_run, range(len(jobs)), chunksize=max(1, len(jobs) // (4 * workers)))
        finally:
            _JOBS = None
    else:
        recs = [_check(*job) for job in jobs]
    report = AuditReport("W", block, n)
    report.records.extend(recs)
    return report.sort()


def rel99_residual(i: int, j: int, n: int, coeff=None) -> VAState:
    """``W2_{i,j} - W2_{-j,-i} - c dW1_{i,j}`` with printed ``c = alpha + 1``."""
    c = ALPHA + 1 if coeff is None else coeff
    return W(2, i, j, n) - W(2, -j, -i, n) - translate(W(1, i, j, n)).scale(c)


def verify_rel99(n: int) -> AuditReport:
    report = AuditReport("W", "rel99", n)
    idx = index_set(n)
    for i, j in itertools.product(idx, repeat=2):
        for variant, c in (("literal", ALPHA + 1), ("corrected", ALPHA)):
            res = rel99_residual(i, j, n, c)
            report.records.append(AuditRecord(
                "rel99", variant, {"i": i, "j": j}, res, res.is_zero(), res.describe(),
                None if variant == "literal" and res.is_zero() else
                "the commutator sum equals W1_{i,j}[-2], giving coefficient alpha"))
    return report.sort()


__all__ = ["BLOCKS", "W2W2_PAIRS", "Identity", "identities", "instances", "verify_ope",
           "rel99_residual", "verify_rel99"]
