"""Generators-and-relations machinery and the encoded presentations."""
from .engine import (Assignment, AuditRecord, AuditReport, MissingGenerator, RelationSpec,
                     Window, audit, evaluate, instantiate, worker_count)
from .expr import Br, Expr, Gen, Lin, Named, Scalar, br, lin, nested

__all__ = ["Assignment", "AuditRecord", "AuditReport", "MissingGenerator", "RelationSpec", "Window",
           "audit", "evaluate", "instantiate", "worker_count", "Br", "Expr", "Gen", "Lin", "Named",
           "Scalar", "br", "lin", "nested"]
