"""Relation specs, assignments into bracket targets, and the audit engine."""
from __future__ import annotations

import itertools
import multiprocessing as mp
import os
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .expr import Br, Expr, Gen, Lin, Named, Scalar
from ..roots import RankTooSmall

WORKERS_ENV = "YANGIAN_AUDIT_WORKERS"


class MissingGenerator(KeyError):
    """The assignment has no image for this symbol (it is not a generator)."""


class UnresolvedNamed(KeyError):
    pass


@dataclass(frozen=True)
class Window:
    rmax: int = 2
    smax: int = 2


class Assignment:
    """Generator symbol -> target element, plus resolution of named leaves.

    ``model`` must provide ``bracket``, ``add``, ``scale``, ``zero``,
    ``scalar``, ``is_zero`` and ``describe``.
    """

    def __init__(self, name: str, model, gens: Callable[[Gen], object],
                 named: Callable[[str, tuple], object] | None = None):
        self.name = name
        self.model = model
        self._gens = gens
        self._named = named
        self._cache: dict = {}

    def image(self, g: Gen):
        try:
            return self._cache[g]
        except KeyError:
            pass
        val = self._gens(g)
        if val is None:
            raise MissingGenerator(str(g))
        self._cache[g] = val
        return val

    def resolve(self, name: str, params: tuple):
        if self._named is None:
            raise UnresolvedNamed(name)
        val = self._named(name, params)
        if val is None:
            raise UnresolvedNamed(f"{name}{params}")
        return val


def evaluate(expr: Expr, asg: Assignment):
    m = asg.model
    if isinstance(expr, Gen):
        return asg.image(expr)
    if isinstance(expr, Br):
        return m.bracket(evaluate(expr.a, asg), evaluate(expr.b, asg))
    if isinstance(expr, Lin):
        out = m.zero()
        for c, e in expr.terms:
            out = m.add(out, m.scale(evaluate(e, asg), c))
        return out
    if isinstance(expr, Named):
        return asg.resolve(expr.name, expr.params)
    if isinstance(expr, Scalar):
        return m.scalar(expr.value)
    raise TypeError(f"not an expression: {expr!r}")


@dataclass
class RelationSpec:
    """A relation family ``lhs = rhs`` quantified over named integer variables.

    ``domains(n, window)`` gives the candidate values of each variable and
    ``cond(n, b)`` filters the product.  ``corrected`` is an alternative
    reading that the auditor reports next to the printed one.
    """

    id: str
    text: str
    variables: tuple
    domains: Callable[[int, Window], dict]
    build: Callable[[int, dict], tuple]
    cond: Callable[[int, dict], bool] = lambda n, b: True
    corrected: Callable[[int, dict], tuple] | None = None
    note: str = ""

    def ranges(self, n: int, window: Window) -> Iterable[dict]:
        doms = self.domains(n, window)
        for vals in itertools.product(*(doms[v] for v in self.variables)):
            b = dict(zip(self.variables, vals))
            if self.cond(n, b):
                yield b


def instantiate(rel: RelationSpec, bindings: dict, n: int, variant: str = "literal") -> Expr:
    """Closed expression ``lhs - rhs`` for one instance."""
    if set(bindings) != set(rel.variables) or not rel.cond(n, bindings):
        raise ValueError(f"bindings {bindings} outside the range of {rel.id}")
    builder = rel.build if variant == "literal" else rel.corrected
    if builder is None:
        raise ValueError(f"{rel.id} has no {variant} reading")
    lhs, rhs = builder(n, bindings)
    return lhs - rhs


@dataclass
class AuditRecord:
    id: str
    variant: str
    bindings: dict
    residual: object
    residual_zero: bool
    residual_repr: str
    ledger_entry: str | None = None

    def sort_key(self):
        return (self.id, self.variant, tuple(sorted(self.bindings.items())))

    def as_dict(self) -> dict:
        d = {
            "id": self.id if self.variant == "literal" else f"{self.id}:{self.variant}",
            "bindings": dict(sorted(self.bindings.items())),
            "residual_zero": self.residual_zero,
            "residual_repr": self.residual_repr,
        }
        if self.ledger_entry:
            d["ledger_entry"] = self.ledger_entry
        return d


@dataclass
class AuditReport:
    presentation: str
    target: str
    n: int
    records: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def sort(self) -> "AuditReport":
        self.records.sort(key=AuditRecord.sort_key)
        self.skipped.sort()
        return self

    def failures(self, variant: str | None = None) -> list:
        return [r for r in self.records if not r.residual_zero
                and (variant is None or r.variant == variant)]

    def ids(self) -> set:
        return {r.id for r in self.records}

    def by_id(self, rid: str, variant: str = "literal") -> list:
        return [r for r in self.records if r.id == rid and r.variant == variant]

    def all_zero(self, rid: str | None = None, variant: str = "literal") -> bool:
        recs = self.records if rid is None else self.by_id(rid, variant)
        return all(r.residual_zero for r in recs if r.variant == variant)

    def summary(self) -> dict:
        out: dict = {}
        for r in self.records:
            key = r.id if r.variant == "literal" else f"{r.id}:{r.variant}"
            tot, bad = out.get(key, (0, 0))
            out[key] = (tot + 1, bad + (not r.residual_zero))
        return dict(sorted(out.items()))


def _check_one(rel: RelationSpec, b: dict, n: int, asg: Assignment, variant: str):
    builder = rel.build if variant == "literal" else rel.corrected
    try:
        lhs, rhs = builder(n, b)
        res = asg.model.add(evaluate(lhs, asg), asg.model.scale(evaluate(rhs, asg), -1))
    except (MissingGenerator, UnresolvedNamed, RankTooSmall) as exc:
        return ("skip", rel.id, variant, tuple(sorted(b.items())), str(exc))
    zero = asg.model.is_zero(res)
    entry = None
    if rel.note and (variant != "literal" or not zero):
        entry = rel.note
    return AuditRecord(rel.id, variant, dict(b), res, zero, asg.model.describe(res), entry)


_TASK: tuple | None = None


def _run_task(k: int):
    rels, jobs, n, asg = _TASK
    ri, b, variant = jobs[k]
    return _check_one(rels[ri], b, n, asg, variant)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def audit(relations: list, asg: Assignment, n: int, window: Window,
          presentation: str = "", ids: Iterable[str] | None = None,
          workers: int | None = None) -> AuditReport:
    """Evaluate every instance of every relation inside the window."""
    global _TASK
    wanted = set(ids) if ids is not None else None
    rels = [r for r in relations if wanted is None or r.id in wanted]
    jobs = []
    report = AuditReport(presentation, asg.name, n)
    for ri, rel in enumerate(rels):
        try:
            inst = list(rel.ranges(n, window))
        except RankTooSmall as exc:
            report.skipped.append((rel.id, "*", (), str(exc)))
            continue
        for b in inst:
            jobs.append((ri, b, "literal"))
            if rel.corrected is not None:
                jobs.append((ri, b, "corrected"))
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1 and "fork" in mp.get_all_start_methods():
        _TASK = (rels, jobs, n, asg)
        try:
            with mp.get_context("fork").Pool(workers) as pool:
                results = pool.map(_run_task, range(len(jobs)), chunksize=max(1, len(jobs) // (4 * workers)))
        finally:
            _TASK = None
    else:
        results = [_check_one(rels[ri], b, n, asg, v) for ri, b, v in jobs]
    for res in results:
        if isinstance(res, tuple):
            report.skipped.append(res[1:])
        else:
            report.records.append(res)
    return report.sort()


__all__ = ["Assignment", "AuditRecord", "AuditReport", "MissingGenerator", "RelationSpec",
           "UnresolvedNamed", "Window", "audit", "evaluate", "instantiate", "worker_count",
           "WORKERS_ENV"]
