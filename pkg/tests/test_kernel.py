import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from yangian_audit import _pykernel as py
from yangian_audit.coeff import ParamPoly

ck = pytest.importorskip("yangian_audit._ckernel", reason="compiled kernel not built")


def rand_terms(rng, size=6):
    out = {}
    for _ in range(rng.randint(0, size)):
        k = tuple(rng.randint(0, 3) for _ in range(4))
        v = Fraction(rng.randint(-5, 5), rng.choice((1, 1, 2, 3)))
        if v:
            out[k] = v
    return out


def test_backends_agree():
    rng = random.Random(7)
    for _ in range(300):
        a, b = rand_terms(rng), rand_terms(rng)
        c = rng.choice((0, 1, -3, Fraction(2, 5)))
        assert ck.poly_mul(a, b) == py.poly_mul(a, b)
        assert ck.poly_add(a, b) == py.poly_add(a, b)
        assert ck.poly_add(a, b, -1) == py.poly_add(a, b, -1)
        assert ck.poly_scale(a, c) == py.poly_scale(a, c)


def test_products_stay_fractions():
    out = ck.poly_mul({(0, 0, 0, 0): Fraction(3)}, {(1, 0, 0, 0): Fraction(-2)})
    assert out == {(1, 0, 0, 0): Fraction(-6)}
    assert all(type(v) is Fraction for v in out.values())


def test_lin_add_agrees():
    rng = random.Random(2)
    for _ in range(50):
        other = {i: ParamPoly(rand_terms(rng)) for i in range(4)}
        base = {i: ParamPoly(rand_terms(rng)) for i in range(2, 6)}
        s = ParamPoly(rand_terms(rng, 2)) + 1
        assert ck.lin_add(dict(base), other, s) == py.lin_add(dict(base), other, s)


@pytest.mark.parametrize("pure,expected", [("1", "python"), (None, "cython")])
def test_env_selects_backend(pure, expected):
    env = dict(os.environ)
    env.pop("YANGIAN_AUDIT_PURE", None)
    if pure:
        env["YANGIAN_AUDIT_PURE"] = pure
    out = subprocess.run([sys.executable, "-c", "import yangian_audit; print(yangian_audit.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == expected
