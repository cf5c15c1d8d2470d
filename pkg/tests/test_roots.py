import random

import pytest
from hypothesis import given, settings, strategies as st

from yangian_audit import roots as R


def comb(n, **kw):
    v = [0] * (n + 1)
    for k, c in kw.items():
        v[int(k[1:])] += c
    return tuple(v)


def test_cartan_is_affine_d():
    for n in range(4, 9):
        a = R.cartan(n)
        assert all(a[i][j] == a[j][i] for i in range(n + 1) for j in range(n + 1))
        # null vector delta
        d = R.delta(n)
        assert all(sum(a[i][j] * d[j] for j in range(n + 1)) == 0 for i in range(n + 1))
    a = R.cartan(4)
    assert [a[2][j] for j in range(5)] == [-1, -1, 2, -1, -1]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_reflection_examples(n):
    for i in range(n + 1):
        assert R.reflect(i, R.simple_root(i, n)) == R.scale(-1, R.simple_root(i, n))
    for s in (-2, 0, 3):
        sd = R.scale(s, R.delta(n))
        beta = R.add(R.simple_root(n - 1, n), R.scale(-1, R.simple_root(n, n)), sd)
        want = R.add(R.simple_root(n - 1, n), R.simple_root(n, n), sd)
        assert R.reflect(n, beta) == want
        beta = R.add(*[R.scale(2, R.simple_root(j, n)) for j in range(1, n - 1)],
                     R.simple_root(n - 1, n), R.simple_root(n, n), sd)
        # 2e_1 + s delta -> -2e_2 + (s+2) delta = alpha_0 + alpha_1 + (s+1) delta
        want = R.add(R.simple_root(0, n), R.simple_root(1, n), R.scale(s + 1, R.delta(n)))
        assert R.reflect(0, beta) == want
        wrong = R.add(R.scale(-1, R.simple_root(0, n)), R.scale(-1, R.simple_root(1, n)),
                      R.scale(s + 1, R.delta(n)))
        assert R.reflect(0, beta) != wrong


def test_membership_examples():
    assert R.in_delta_ex(comb(4, a1=1), 4)
    assert R.in_delta_ex(comb(4, a3=1, a4=-1), 4)
    assert not R.in_delta_ex(comb(5, a1=1, a3=1), 5)
    assert R.in_delta_ex(R.delta(5), 5)
    assert R.in_delta_ex(comb(4, a0=1, a1=-1), 4)
    assert not R.in_delta_ex(comb(4, a0=2), 4)


def test_finite_part_roundtrip():
    rng = random.Random(3)
    for n in (4, 5, 7):
        for _ in range(200):
            beta = tuple(rng.randint(-4, 4) for _ in range(n + 1))
            g, d = R.finite_part(beta, n)
            assert R.from_finite(g, d, n) == beta


def test_brute_force_membership_small_heights():
    # oracle: real roots are the Weyl orbit of simple roots
    n = 5
    orbit = R.orbit_generate([R.simple_root(j, n) for j in range(n + 1)], 2, n, margin=4)
    for beta in orbit:
        assert R.in_delta(beta, n)
    window = {b for b in R.delta_ex_window(n, 2) if R.in_delta(b, n)}
    assert window == orbit


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 7), st.data())
def test_reflections_are_involutions_and_fix_delta(n, data):
    beta = tuple(data.draw(st.lists(st.integers(-5, 5), min_size=n + 1, max_size=n + 1)))
    for i in range(n + 1):
        assert R.reflect(i, R.reflect(i, beta)) == beta
        assert R.reflect(i, R.delta(n)) == R.delta(n)


@pytest.mark.parametrize("n", [4, 5])
def test_reflections_preserve_extended_set(n):
    for beta in R.delta_ex_window(n, 2):
        for i in range(n + 1):
            assert R.in_delta_ex(R.reflect(i, beta), n)


def test_orbit_examples():
    assert R.orbit_generate([], 3) == set()
    n = 4
    got = R.orbit_generate([R.simple_root(1, n)], 0)
    want = {R.from_finite(g, 0, n) for g in R.finite_roots(n)}
    assert got == want
    got = R.orbit_generate(R.orbit_seeds(n), 3)
    assert got == R.delta_ex_window(n, 3)


def test_orbit_margin_is_enough():
    n = 4
    assert R.orbit_generate(R.orbit_seeds(n), 3, margin=2) == \
        R.orbit_generate(R.orbit_seeds(n), 3, margin=6)


def test_printed_range_misses_two_e_last():
    diff = R.orbit_diff(4, 2, literal=True)
    assert diff["missing_from_orbit"] == []
    assert diff["extra_in_orbit"]
    assert all(R.finite_part(b, 4)[0] in {(0, 0, 2, 0), (0, 0, -2, 0)}
               for b in diff["extra_in_orbit"])
    assert R.orbit_diff(4, 2) ["extra_in_orbit"] == []
