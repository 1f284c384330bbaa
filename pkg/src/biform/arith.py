"""Integer and multiplicative-function substrate.

A smallest-prime-factor table backs the Moebius function, the divisor
statistics and squarefree decompositions. Python integers are unbounded, so
products of coordinates never overflow on this side; the compiled kernels
guard their own input ranges.
"""

from __future__ import annotations

import math
import os
import threading
from dataclasses import dataclass
from functools import reduce

import numpy as np

DEFAULT_SIEVE_LIMIT = 10**7


class SieveTooSmall(ValueError):
    """Raised when an argument exceeds the sieve range."""


def gcd_many(values) -> int:
    values = list(values)
    if not values:
        raise ValueError("gcd_many needs at least one value")
    return reduce(math.gcd, values)


class FactorSieve:
    """Smallest prime factor table for 2..limit. Immutable after construction."""

    def __init__(self, limit: int):
        if limit < 1:
            raise ValueError("sieve limit must be positive")
        self.limit = int(limit)
        spf = np.zeros(self.limit + 1, dtype=np.int32)
        r = math.isqrt(self.limit)
        for p in range(2, r + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        idx = np.nonzero(spf == 0)[0]
        spf[idx] = idx
        spf.setflags(write=False)
        self.spf = spf

    def __repr__(self) -> str:
        return f"FactorSieve(limit={self.limit})"

    def _check(self, n: int) -> None:
        if n < 1:
            raise ValueError(f"expected a positive integer, got {n}")
        if n > self.limit:
            raise SieveTooSmall(f"{n} exceeds sieve limit {self.limit}")

    def factorize(self, n: int) -> dict[int, int]:
        """Prime factorisation of ``n`` as ``{p: exponent}``."""
        n = int(n)
        self._check(n)
        out: dict[int, int] = {}
        spf = self.spf
        while n > 1:
            p = int(spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
        return out

    def primes(self, n: int) -> list[int]:
        return sorted(self.factorize(n))


_shared_lock = threading.Lock()
_shared: FactorSieve | None = None


def sieve_cap() -> int:
    return int(os.environ.get("BIFORM_SIEVE_LIMIT", DEFAULT_SIEVE_LIMIT))


def shared_sieve(n: int = 1) -> FactorSieve:
    """Process-wide sieve covering at least ``n``, grown by doubling up to the cap.

    The cap comes from ``BIFORM_SIEVE_LIMIT`` (default 10**7).
    """
    global _shared
    s = _shared
    if s is not None and s.limit >= n:
        return s
    cap = sieve_cap()
    if n > cap:
        raise SieveTooSmall(f"{n} exceeds the sieve cap {cap} (set BIFORM_SIEVE_LIMIT)")
    with _shared_lock:
        s = _shared
        if s is None or s.limit < n:
            old = s.limit if s is not None else 1 << 15
            new = min(cap, max(n, 2 * old))
            _shared = s = FactorSieve(new)
    return s


def mobius(n: int, sieve: FactorSieve) -> int:
    f = sieve.factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisor_stats(n: int, sieve: FactorSieve) -> tuple[int, int]:
    """Return ``(omega, tau)``: distinct prime count and divisor count."""
    f = sieve.factorize(n)
    tau = 1
    for e in f.values():
        tau *= e + 1
    return len(f), tau


def divisors(n: int, sieve: FactorSieve) -> list[int]:
    ds = [1]
    for p, e in sieve.factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


@dataclass(frozen=True)
class SquarefreeParts:
    z: int
    ell: int

    def value(self) -> int:
        return self.z * self.z * self.ell


def squarefree_decompose(u: int, sieve: FactorSieve) -> SquarefreeParts:
    """Write ``u = z**2 * ell`` with ``z > 0`` and ``ell`` squarefree (sign on ``ell``)."""
    if u == 0:
        raise ValueError("cannot decompose 0")
    z, ell = 1, 1
    for p, e in sieve.factorize(abs(u)).items():
        z *= p ** (e // 2)
        if e % 2:
            ell *= p
    return SquarefreeParts(z, ell if u > 0 else -ell)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a | n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def valuation(n: int, p: int) -> int:
    n = abs(n)
    if n == 0:
        raise ValueError("valuation of 0")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def modinv(a: int, m: int) -> int:
    return pow(a, -1, m)
