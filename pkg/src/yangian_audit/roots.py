"""Affine D_n root data, simple reflections and bounded Weyl-orbit search.

Root vectors are integer tuples ``(c_0, ..., c_n)`` in the simple-root basis.
For membership tests a vector is split as ``c_0 * delta + gamma`` with the
finite part ``gamma = sum_{i>=1} c_i alpha_i - c_0 theta`` written in the
orthonormal ``e``-coordinates of D_n (``alpha_i = e_i - e_{i+1}``,
``alpha_n = e_{n-1} + e_n``, ``theta = e_1 + e_2``).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

RootVector = tuple


@dataclass(frozen=True)
class DegreePair:
    root: RootVector
    level: int

    def __post_init__(self):
        if self.level < 0:
            raise ValueError("level must be non-negative")


class RankTooSmall(ValueError):
    """The affine D_n node pattern needs n >= 4."""


def _check_n(n: int) -> None:
    if n < 4:
        raise RankTooSmall("affine D_n root data needs n >= 4")


@lru_cache(maxsize=None)
def cartan(n: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of affine D_n (nodes 0..n; 0 and 1 hang off 2, n-1 and n off n-2)."""
    _check_n(n)
    edges = {(0, 2), (1, 2), (n - 2, n - 1), (n - 2, n)}
    edges |= {(j, j + 1) for j in range(2, n - 2)}
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        a[i][i] = 2
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return tuple(tuple(row) for row in a)


def simple_root(i: int, n: int) -> RootVector:
    v = [0] * (n + 1)
    v[i] = 1
    return tuple(v)


def delta(n: int) -> RootVector:
    """delta = alpha_0 + alpha_1 + 2(alpha_2 + ... + alpha_{n-2}) + alpha_{n-1} + alpha_n."""
    return tuple([1, 1] + [2] * (n - 3) + [1, 1])


def add(*vs: RootVector) -> RootVector:
    return tuple(sum(c) for c in zip(*vs))


def scale(c: int, v: RootVector) -> RootVector:
    return tuple(c * x for x in v)


def reflect(i: int, beta: RootVector, n: int | None = None) -> RootVector:
    """``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i``."""
    n = len(beta) - 1 if n is None else n
    if not 0 <= i <= n:
        raise ValueError(f"node {i} out of range 0..{n}")
    a = cartan(n)
    pairing = sum(a[i][j] * beta[j] for j in range(n + 1))
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


def finite_part(beta: RootVector, n: int) -> tuple[tuple[int, ...], int]:
    """Return ``(gamma in e-coordinates, delta coefficient)``."""
    c0 = beta[0]
    x = [0] * (n + 1)  # 1-based e-coordinates
    for i in range(1, n - 1):
        x[i] += beta[i]
        x[i + 1] -= beta[i]
    x[n - 1] += beta[n - 1] + beta[n]
    x[n] += -beta[n - 1] + beta[n]
    x[1] -= c0
    x[2] -= c0
    return tuple(x[1:]), c0


def from_finite(gamma: Iterable[int], d: int, n: int) -> RootVector:
    """Inverse of :func:`finite_part`."""
    x = list(gamma)
    x[0] += d
    x[1] += d
    c = [0] * (n + 1)
    c[0] = d
    partial = 0
    for i in range(1, n - 1):
        partial += x[i - 1]
        c[i] = partial
    s_nm1 = partial + x[n - 2]
    twice_n, twice_nm1 = s_nm1 + x[n - 1], s_nm1 - x[n - 1]
    if twice_n % 2 or twice_nm1 % 2:
        raise ValueError("vector not in the root lattice")
    c[n], c[n - 1] = twice_n // 2, twice_nm1 // 2
    return tuple(c)


@lru_cache(maxsize=None)
def finite_roots(n: int) -> frozenset:
    """D_n roots ``+-e_i +- e_j`` (i < j), exhaustive table."""
    out = set()
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * n
                    v[i], v[j] = si, sj
                    out.add(tuple(v))
    return frozenset(out)


@lru_cache(maxsize=None)
def extra_finite_parts(n: int, literal: bool = False) -> frozenset:
    """Finite parts of the non-root members of the extended set.

    ``2 sum_{j=i}^{n-2} alpha_j + alpha_{n-1} + alpha_n = 2 e_i``,
    ``alpha_{n-1} - alpha_n = -2 e_n`` and ``alpha_0 - alpha_1 = delta - 2 e_1``.
    The printed range stops at ``i = n-2``; the Weyl-closed set needs
    ``i = n-1`` as well (``alpha_{n-1} + alpha_n``), which ``literal=False`` adds.
    """
    top = n - 2 if literal else n - 1
    idx = list(range(1, top + 1)) + [n]
    out = set()
    for i in idx:
        for sign in (1, -1):
            v = [0] * n
            v[i - 1] = 2 * sign
            out.add(tuple(v))
    return frozenset(out)


def in_delta(beta: RootVector, n: int) -> bool:
    gamma, d = finite_part(beta, n)
    if not any(gamma):
        return d != 0
    return gamma in finite_roots(n)


def in_delta_ex(beta: RootVector, n: int, literal: bool = False) -> bool:
    _check_n(n)
    if in_delta(beta, n):
        return True
    gamma, _ = finite_part(beta, n)
    return gamma in extra_finite_parts(n, literal)


def delta_ex_window(n: int, s_bound: int, literal: bool = False,
                    imaginary: bool = False) -> set:
    """All members of the extended set with ``|delta coefficient| <= s_bound``."""
    out = set()
    parts = set(finite_roots(n)) | set(extra_finite_parts(n, literal))
    for d in range(-s_bound, s_bound + 1):
        for g in parts:
            out.add(from_finite(g, d, n))
        if imaginary and d:
            out.add(scale(d, delta(n)))
    return out


def orbit_generate(seeds: Iterable[RootVector], s_bound: int, n: int | None = None,
                   margin: int = 2) -> set:
    """BFS closure under all ``s_i`` inside ``|c_0| <= s_bound + margin``,
    then restricted to ``|c_0| <= s_bound``.

    The margin lets paths leave the window briefly; with root heights bounded
    by ``theta`` no reflection moves ``c_0`` by more than 2.
    """
    seeds = list(seeds)
    if not seeds:
        return set()
    n = len(seeds[0]) - 1 if n is None else n
    limit = s_bound + margin
    seen = {b for b in seeds if abs(b[0]) <= limit}
    queue = deque(seen)
    while queue:
        beta = queue.popleft()
        for i in range(n + 1):
            img = reflect(i, beta, n)
            if abs(img[0]) <= limit and img not in seen:
                seen.add(img)
                queue.append(img)
    return {b for b in seen if abs(b[0]) <= s_bound}


def orbit_seeds(n: int) -> list:
    """``{alpha_j} + {+-(alpha_{n-1} - alpha_n), +-(alpha_0 - alpha_1)}``."""
    seeds = [simple_root(j, n) for j in range(n + 1)]
    a = add(simple_root(n - 1, n), scale(-1, simple_root(n, n)))
    b = add(simple_root(0, n), scale(-1, simple_root(1, n)))
    return seeds + [a, scale(-1, a), b, scale(-1, b)]


def orbit_diff(n: int, s_bound: int, literal: bool = False) -> dict:
    """Compare the orbit of the seeds with the extended set in the window."""
    orbit = orbit_generate(orbit_seeds(n), s_bound, n)
    target = delta_ex_window(n, s_bound, literal=literal)
    return {
        "orbit_size": len(orbit),
        "target_size": len(target),
        "missing_from_orbit": sorted(target - orbit),
        "extra_in_orbit": sorted(orbit - target),
    }


def matrix_unit_degree(i: int, j: int, r: int, n: int) -> tuple[tuple[int, ...], int]:
    """``(e_i - e_j, r)`` for ``E_{i,j} u^r`` with ``e_{-k} = -e_k``."""
    v = [0] * n
    v[abs(i) - 1] += 1 if i > 0 else -1
    v[abs(j) - 1] -= 1 if j > 0 else -1
    return tuple(v), r
