"""Command-line front end.

Every subcommand builds an :class:`AuditReport` (or an equivalent record list),
writes it as JSON or Markdown and maps it to an exit code: 0 when every
nonzero residual carries a ledger entry, 1 otherwise, 2 on usage or I/O
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .present import AuditRecord, AuditReport, Window, audit, worker_count

SCHEMA_VERSION = "1"
PRESENTATIONS = ("A", "D", "Dfin", "ty")
TARGETS = ("pi", "phi")
OPE_BLOCKS = ("w1w1", "w1w2", "w2w2", "corollary")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    n: int = 4
    rmax: int = 2
    smax: int = 2
    truncate: int = 6
    checks: list = field(default_factory=list)
    format: str = "json"
    workers: int | None = None

    def validate(self) -> None:
        if not self.checks:
            raise UsageError("empty check list")
        if min(self.rmax, self.smax, self.truncate) < 0:
            raise UsageError("windows must be >= 0")
        if self.format not in ("json", "md"):
            raise UsageError(f"unknown format {self.format!r}")


# report emission ----------------------------------------------------------------

def _records(report: AuditReport) -> list:
    return [r.as_dict() for r in report.records]


def unexpected(records: list) -> list:
    return [r for r in records if not r["residual_zero"] and not r.get("ledger_entry")]


def render(config: dict, records: list, fmt: str) -> str:
    if fmt == "json":
        doc = {"version": SCHEMA_VERSION, "config": config, "results": records}
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    lines = [f"# audit report (schema {SCHEMA_VERSION})", ""]
    lines += [f"- {k}: {v}" for k, v in sorted(config.items())]
    bad = unexpected(records)
    ledgered = sum(1 for r in records if not r["residual_zero"]) - len(bad)
    lines += ["", f"{len(records)} instances, {ledgered} ledgered nonzero, {len(bad)} unexpected", "",
              "| id | bindings | zero | residual | ledger |", "|---|---|---|---|---|"]
    for r in records:
        b = ", ".join(f"{k}={v}" for k, v in r["bindings"].items())
        res = r["residual_repr"].replace("|", "\\|")
        lines.append(f"| {r['id']} | {b} | {'yes' if r['residual_zero'] else 'no'} | {res} | "
                     f"{r.get('ledger_entry', '')} |")
    return "\n".join(lines) + "\n"


def emit(config: dict, records: list, fmt: str, output: str | None) -> int:
    text = render(config, records, fmt)
    try:
        if output and output != "-":
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return 2
    return 1 if unexpected(records) else 0


# audits -------------------------------------------------------------------------

def audit_presentation(presentation: str, target: str, n: int, rmax: int, smax: int,
                       ids=None, workers: int | None = None) -> tuple[dict, AuditReport]:
    if presentation not in PRESENTATIONS:
        raise UsageError(f"unknown presentation {presentation!r}")
    if target not in TARGETS:
        raise UsageError(f"unknown target {target!r}")
    window = Window(rmax, smax)
    config = {"command": "audit", "presentation": presentation, "target": target, "n": n,
              "rmax": rmax, "smax": smax}
    if presentation == "ty":
        from .ueva import PHI_N, verify_phi
        if target != "phi":
            raise UsageError("ty is audited under Phi only (--target phi)")
        if n != PHI_N:
            raise UsageError(f"Phi is defined for n = {PHI_N}")
        return config, _checked(lambda: verify_phi(ids, window, workers=workers))
    if presentation in ("D", "Dfin") and n < 3:
        raise UsageError("D-type checks need n >= 3")
    if presentation == "A":
        from .present.an import a_relations, iota_assignment
        config["target"] = "iota"
        rels, asg = a_relations(n), iota_assignment(n)
    elif presentation == "D":
        from .present.dn import assignment, d_relations
        rels, asg = d_relations(n), assignment(target, n)
    else:
        from .present.dfin import dfin_relations
        from .present.dn import assignment
        rels, asg = dfin_relations(n), assignment(target, n)
    if ids is not None:
        missing = set(ids) - {r.id for r in rels}
        if missing:
            raise UsageError(f"unknown relation ids: {', '.join(sorted(missing))}")
    report = audit(rels, asg, n, window, presentation, ids, workers)
    if presentation == "D" and target == "phi" and ids is None:
        from .present.section4 import verify_section4
        report.records += verify_section4(n, max(rmax, 1), smax).records
        report.sort()
    return config, report


def _checked(fn):
    try:
        return fn()
    except KeyError as exc:
        raise UsageError(str(exc.args[0] if exc.args else exc)) from None


def ope_report(block: str, n: int, indices=None, workers: int | None = None) -> tuple[dict, AuditReport]:
    from .vertex import verify_ope, verify_rel99
    config = {"command": "ope", "check": block, "n": n,
              "indices": list(indices) if indices else None}
    if block == "rel99":
        return config, verify_rel99(n)
    try:
        return config, verify_ope(block, n, indices, workers)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def orbit_report(n: int, smax: int) -> tuple[dict, list]:
    from .roots import orbit_diff
    try:
        d = orbit_diff(n, smax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    diff = {"missing_from_orbit": [list(v) for v in d["missing_from_orbit"]],
            "extra_in_orbit": [list(v) for v in d["extra_in_orbit"]]}
    zero = not diff["missing_from_orbit"] and not diff["extra_in_orbit"]
    rec = AuditRecord("orbit", "literal", {"n": n, "smax": smax}, None, zero,
                      "0" if zero else json.dumps(diff, sort_keys=True))
    config = {"command": "roots orbit", "n": n, "smax": smax,
              "orbit_size": d["orbit_size"], "target_size": d["target_size"]}
    return config, [rec.as_dict()]


def yangian_report(checks: list, truncate: int, rmax: int, workers: int | None = None):
    from .ueva import verify_phi
    config = {"command": "yangian", "checks": list(checks), "truncate": truncate, "rmax": rmax}
    rep = _checked(lambda: verify_phi(checks, Window(rmax, rmax), truncate, workers=workers))
    return config, rep


# run ------------------------------------------------------------------------------

def _split_check(check: str) -> list:
    parts = check.split(":")
    if not parts[0]:
        raise UsageError(f"malformed check {check!r}")
    return parts


def run(config: RunConfig) -> tuple[dict, list]:
    """Run a list of checks.

    Check ids: ``audit:<presentation>:<target>``, ``ope:<block>``, ``rel99``,
    ``roots``, ``yangian:<rel id>`` (``yangian`` alone runs everything).
    """
    config.validate()
    results: list = []
    for check in config.checks:
        kind, *rest = _split_check(check)
        if kind == "audit" and len(rest) == 2:
            _, rep = audit_presentation(rest[0], rest[1], config.n, config.rmax, config.smax,
                                        workers=config.workers)
            recs = _records(rep)
        elif kind == "ope" and len(rest) == 1:
            recs = _records(ope_report(rest[0], config.n, workers=config.workers)[1])
        elif kind == "rel99" and not rest:
            recs = _records(ope_report("rel99", config.n)[1])
        elif kind == "roots" and not rest:
            recs = orbit_report(config.n, config.smax)[1]
        elif kind == "yangian" and len(rest) <= 1:
            recs = _records(yangian_report(rest or None, config.truncate, config.rmax,
                                           config.workers)[1])
        else:
            raise UsageError(f"unknown check {check!r}")
        for r in recs:
            r["check"] = check
        results.extend(recs)
    cfg = {"command": "run", "n": config.n, "rmax": config.rmax, "smax": config.smax,
           "truncate": config.truncate, "checks": list(config.checks)}
    return cfg, results


def load_config(path: str) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    win = raw.get("windows", {})
    try:
        return RunConfig(n=int(raw.get("n", 4)), rmax=int(win.get("rmax", 2)),
                         smax=int(win.get("smax", 2)), truncate=int(win.get("truncate", 6)),
                         checks=list(raw.get("checks", [])), format=raw.get("format", "json"),
                         workers=raw.get("workers"))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad config {path}: {exc}") from None


# argument parsing --------------------------------------------------------------

def _indices(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="yangian-audit", description="Exact residual audits.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, fmt=True):
        if fmt:
            sp.add_argument("--format", choices=("json", "md"), default="json")
        sp.add_argument("--output", "-o", help="write the report here instead of stdout")

    a = sub.add_parser("audit", help="relations of a presentation under a homomorphism")
    a.add_argument("--presentation", choices=PRESENTATIONS, required=True)
    a.add_argument("--target", choices=TARGETS, required=True)
    a.add_argument("--n", type=int, default=4)
    a.add_argument("--rmax", type=_nonneg, default=2)
    a.add_argument("--smax", type=_nonneg, default=2)
    a.add_argument("--check", action="append", help="restrict to these relation ids")
    common(a)

    r = sub.add_parser("roots", help="root system checks")
    rsub = r.add_subparsers(dest="roots_command", required=True, parser_class=_Parser)
    o = rsub.add_parser("orbit", help="Weyl orbit of the seeds against the extended root set")
    o.add_argument("--n", type=int, default=4)
    o.add_argument("--smax", type=_nonneg, default=4)
    common(o)

    e = sub.add_parser("ope", help="OPE identities of the W-algebra")
    e.add_argument("--check", choices=OPE_BLOCKS + ("rel99",), required=True)
    e.add_argument("--n", type=int, default=4)
    e.add_argument("--indices", type=_indices)
    common(e)

    y = sub.add_parser("yangian", help="the map into the completed enveloping algebra")
    y.add_argument("--check", action="append", required=True, help="rel<k> or an identity id")
    y.add_argument("--truncate", type=_nonneg, default=6)
    y.add_argument("--rmax", type=_nonneg, default=2)
    common(y)

    rn = sub.add_parser("run", help="run a list of checks")
    rn.add_argument("--config", help="JSON file with n, windows, checks, format")
    rn.add_argument("--check", action="append", default=[])
    rn.add_argument("--n", type=int, default=4)
    rn.add_argument("--rmax", type=_nonneg, default=2)
    rn.add_argument("--smax", type=_nonneg, default=2)
    rn.add_argument("--truncate", type=_nonneg, default=6)
    common(rn)
    return p


def _dispatch(args) -> tuple[dict, list, str]:
    workers = worker_count()
    if args.command == "audit":
        cfg, rep = audit_presentation(args.presentation, args.target, args.n, args.rmax, args.smax,
                                      args.check, workers)
        return cfg, _records(rep), args.format
    if args.command == "roots":
        cfg, recs = orbit_report(args.n, args.smax)
        return cfg, recs, args.format
    if args.command == "ope":
        cfg, rep = ope_report(args.check, args.n, args.indices, workers)
        return cfg, _records(rep), args.format
    if args.command == "yangian":
        cfg, rep = yangian_report(args.check, args.truncate, args.rmax, workers)
        return cfg, _records(rep), args.format
    if args.config:
        config = load_config(args.config)
    else:
        config = RunConfig(args.n, args.rmax, args.smax, args.truncate, list(args.check), args.format)
    config.workers = workers
    cfg, recs = run(config)
    return cfg, recs, config.format


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg, recs, fmt = _dispatch(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return emit(cfg, recs, fmt, args.output)


if __name__ == "__main__":
    sys.exit(main())
