"""Compare the compiled and pure-Python kernels.

Each workload runs in a fresh interpreter (caches start cold) once with the
compiled backend and once with ``YANGIAN_AUDIT_PURE=1``.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--only NAME]
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "poly": """
import random
from fractions import Fraction
from yangian_audit.coeff import ALPHA, EPS, HBAR, ONE
rng = random.Random(1)
p = ONE
for _ in range(40):
    q = HBAR * rng.randint(-3, 3) + EPS * Fraction(rng.randint(1, 5), 7) + ALPHA * ALPHA + 1
    p = (p * q)
    p = p + q * 3 - HBAR
    if len(p.terms) > 400:
        p = q
""",
    "ope_w1w2_n3": """
from yangian_audit.vertex import verify_ope
verify_ope("w1w2", 3, workers=1)
""",
    "audit_D_pi": """
from yangian_audit.present import Window, audit
from yangian_audit.present.dn import assignment, d_relations
audit(d_relations(4), assignment("pi", 4), 4, Window(2, 2), workers=1)
""",
    "phi_rel10": """
from yangian_audit.ueva import verify_phi
verify_phi(["rel10"], truncate=6, workers=1)
""",
}

TIMER = """
import time, json
t = time.perf_counter()
{body}
import yangian_audit
print(json.dumps([yangian_audit.BACKEND, time.perf_counter() - t]))
"""


def once(body: str, pure: bool) -> tuple:
    env = dict(os.environ)
    env.pop("YANGIAN_AUDIT_PURE", None)
    if pure:
        env["YANGIAN_AUDIT_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", TIMER.format(body=body)], env=env,
                         capture_output=True, text=True, check=True)
    return tuple(json.loads(out.stdout.strip().splitlines()[-1]))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", choices=sorted(WORKLOADS))
    args = ap.parse_args(argv)
    names = [args.only] if args.only else list(WORKLOADS)
    print(f"{'workload':<14} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for name in names:
        body = WORKLOADS[name]
        fast = [once(body, False) for _ in range(args.repeat)]
        slow = [once(body, True) for _ in range(args.repeat)]
        backend = fast[0][0]
        tf, ts = min(t for _, t in fast), min(t for _, t in slow)
        label = "compiled" if backend == "cython" else "(not built)"
        print(f"{name:<14} {tf:>9.3f}s {ts:>9.3f}s {ts / tf:>7.2f}x  {label if backend != 'cython' else ''}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
