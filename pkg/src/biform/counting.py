"""Exact counts of points of bounded anticanonical height on the open subset
of x0 y0^2 + x1 y1^2 + x2 y2^2 = 0 where no coordinate vanishes.

Three independent pipelines give N(B):

* ``brute``: direct enumeration (small B only).
* ``fiber``: fibres over y with small height are lattice-point counts in a
  plane; for the remaining points H(x) is small, and fibres over x are conics
  whose points are enumerated through a rational parametrisation.
* ``param``: the gcd parametrisation count T(B), divided by 4.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import permutations
from math import gcd, isqrt
from multiprocessing import Pool

from . import kernels
from .arith import divisors, mobius, shared_sieve
from .conic import parametrize, rational_point
from .projective import D2, BoundTooLarge, ProjPoint, VarietyParams, normalize

METHODS = ("brute", "fiber", "param")
BRUTE_LIMIT = 10**6


@dataclass
class CountRecord:
    bound: int
    method: str
    count: int
    elapsed: float
    shards: int = 1


def icbrt(n: int) -> int:
    r = int(round(n ** (1 / 3)))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def default_threshold(B: int) -> int:
    """Split height T between the y-fibre and x-fibre regions of the fiber method."""
    return max(1, 4 * icbrt(B))


def _naive_linear(B: int) -> int:
    """Direct count for the linear variety sum x_i y_i = 0, height H(x)^2 H(y)^2."""
    total = 0
    R = isqrt(B)
    pts = [(a, b, c) for a in range(1, R + 1) for b in range(-R, R + 1) for c in range(-R, R + 1)
           if b and c and gcd(gcd(a, b), c) == 1]
    for y in pts:
        hy = max(abs(v) for v in y)
        hx = isqrt(B // (hy * hy))
        for x in pts:
            if max(abs(v) for v in x) <= hx and x[0] * y[0] + x[1] * y[1] + x[2] * y[2] == 0:
                total += 1
    return total


def count_brute(B: int, params: VarietyParams = D2) -> CountRecord:
    if B < 1:
        raise ValueError("B must be positive")
    if B > BRUTE_LIMIT:
        raise BoundTooLarge(f"brute force is limited to B <= {BRUTE_LIMIT}")
    t0 = time.perf_counter()
    if params.d == 2:
        n = kernels.brute_count(B, icbrt(B))
    else:
        n = _naive_linear(B)
    return CountRecord(B, "brute", n, time.perf_counter() - t0)


def brute_points(B: int) -> list[tuple[ProjPoint, ProjPoint]]:
    """Every counted point for the (1, 2) threefold, for property checks."""
    _, pts = kernels.brute_count(B, icbrt(B), True)
    return [(ProjPoint(x), ProjPoint(y)) for x, y in pts]


def count_fiber(y, Xmax: int, d: int = 2) -> int:
    """Normalised x with nonzero coordinates, |x_i| <= Xmax and sum x_i y_i^d = 0."""
    y = tuple(y)
    if not all(y):
        raise ValueError("fibre needs a point with nonzero coordinates")
    return kernels.fiber_count(y[0], y[1], y[2], Xmax, d)


def x_classes(S: int):
    """Indefinite normalised x with H(x) <= S, one per orbit of coordinate
    permutations and sign, with the orbit size."""
    for a in range(1, S + 1):
        for b in range(a, S + 1):
            gab = gcd(a, b)
            for c in range(b, S + 1):
                if gcd(gab, c) != 1:
                    continue
                seen = set()
                for s in ((1, 1, -1), (1, -1, 1), (-1, 1, 1)):
                    x = (a * s[0], b * s[1], c * s[2])
                    orbit = {normalize(p).coords for p in permutations(x)}
                    canon = min(orbit)
                    if canon in seen:
                        continue
                    seen.add(canon)
                    yield canon, len(orbit)


def conic_fiber_count(x, ylo: int, yhi: int) -> int:
    """Projective y with nonzero coordinates, sum x_i y_i^2 = 0, ylo < H(y) <= yhi."""
    if yhi <= ylo:
        return 0
    P = rational_point(x)
    if P is None:
        return 0
    par = parametrize(x, P)
    res = par.resultant
    divs = divisors(res, shared_sieve(res))
    return kernels.conic_count(tuple(x), par.R, par.l[0], par.l[1], ylo, yhi, divs)


def _region_b(B: int, T: int, shard: int, nshards: int) -> int:
    S = isqrt(B // (T + 1))
    total = 0
    for idx, (x, w) in enumerate(x_classes(S)):
        if idx % nshards != shard:
            continue
        hx = max(abs(v) for v in x)
        total += w * conic_fiber_count(x, T, B // (hx * hx))
    return total


def _shard_job(args):
    B, T, shard, nshards = args
    return kernels.fiber_region_sum(B, T, shard, nshards) + _region_b(B, T, shard, nshards)


def fiber_total(B: int, shards: int = 1, T: int | None = None, processes: int | None = None) -> int:
    T = default_threshold(B) if T is None else T
    jobs = [(B, T, s, shards) for s in range(shards)]
    if processes is None:
        processes = min(shards, os.cpu_count() or 1)
    if processes <= 1 or shards == 1:
        parts = [_shard_job(j) for j in jobs]
    else:
        with Pool(processes) as pool:
            parts = pool.map(_shard_job, jobs)
    return sum(parts)


def count_total(B: int, method: str = "fiber", shards: int = 1) -> CountRecord:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if shards < 1:
        raise ValueError("shards must be positive")
    if method == "brute":
        rec = count_brute(B)
        rec.shards = shards
        return rec
    t0 = time.perf_counter()
    if method == "fiber":
        n = fiber_total(B, shards)
    else:
        from .param import count_T

        t = count_T(B)
        if t % 4:
            raise ArithmeticError(f"T({B}) = {t} is not divisible by 4")
        n = t // 4
    return CountRecord(B, method, n, time.perf_counter() - t0, shards)


def _check_sk_args(y, B, k):
    y = tuple(int(v) for v in y)
    if len(y) != 3 or min(y) < 1:
        raise ValueError("y must be a triple of positive integers")
    if gcd(y[0], y[2]) != 1:
        raise ValueError("needs gcd(y0, y2) = 1")
    if B < 1 or k < 1:
        raise ValueError("B and k must be positive")
    return y


def sk_exact(y, B: int, k: int) -> int:
    """Nonzero x' with sum x_i' y_i^2 = 0 and 4 k^2 y2 x_i'^2 <= B for i = 0, 1.

    Runs over x1' and counts the residue class of x0' forced by the congruence
    modulo y2^2.
    """
    y0, y1, y2 = _check_sk_args(y, B, k)
    L = isqrt(B // (4 * k * k * y2))
    M = y2 * y2
    inv = pow(y0 * y0, -1, M) if M > 1 else 0
    total = 0
    for x1 in range(-L, L + 1):
        if x1 == 0:
            continue
        r = (-inv * x1 * y1 * y1) % M
        n = (L - r) // M - (-L - 1 - r) // M
        if r == 0:
            n -= 1
        num = -x1 * y1 * y1
        if num % (y0 * y0) == 0:
            x0 = num // (y0 * y0)
            if x0 and abs(x0) <= L:
                n -= 1
        total += n
    return total


def sk_mainterm(y, B, k) -> float:
    return B / (k * k * y[2] ** 3)


def _restricted_ys(B: int):
    top = 1
    while (top + 1) ** 6 <= B:
        top += 1
    for y2 in range(1, top + 1):
        for y1 in range(1, y2):
            for y0 in range(1, y1):
                if gcd(y0, y2) == 1:
                    yield y0, y1, y2


def restricted_lower_count(B: int) -> int:
    """12 times the primitive x counted over y0 < y1 < y2 <= B^(1/6), gcd(y0, y2) = 1,
    with 4 x_i^2 y2 <= B for i = 0, 1."""
    total = 0
    for y0, y1, y2 in _restricted_ys(B):
        L = isqrt(B // (4 * y2))
        M = y2 * y2
        inv = pow(y0 * y0, -1, M)
        for x1 in range(-L, L + 1):
            if x1 == 0:
                continue
            r = (-inv * x1 * y1 * y1) % M
            start = r - ((r + L) // M) * M
            for x0 in range(start, L + 1, M):
                if x0 == 0:
                    continue
                num = -(x0 * y0 * y0 + x1 * y1 * y1)
                x2 = num // M
                if x2 and gcd(gcd(x0, x1), x2) == 1:
                    total += 1
    return 12 * total


def restricted_by_mobius(B: int) -> int:
    """The restricted count again, through sum_k mu(k) S_k."""
    sieve = shared_sieve(isqrt(B) + 1)
    total = 0
    for y in _restricted_ys(B):
        k = 1
        while 4 * k * k * y[2] <= B:
            mu = mobius(k, sieve)
            if mu:
                total += mu * sk_exact(y, B, k)
            k += 1
    return 12 * total
