"""Diagonal ternary quadratics a v0^2 + b v1^2 + c v2^2 = 0.

Decision procedures (rational solubility, solubility in nonzero pairwise
coprime integers), a witness finder, a rational parametrisation through a
known point, and an independent search-based decision used as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from . import kernels
from .arith import jacobi, shared_sieve, squarefree_decompose, valuation


class OracleBug(RuntimeError):
    """The criterion and the constructive search disagree."""


@dataclass(frozen=True)
class ReducedForm:
    """Squarefree pairwise-coprime form equivalent to the original.

    A solution X of the reduced form gives the solution v_i = X_i / square_scales[i]
    of the original (up to clearing denominators).
    """

    coeffs: tuple[int, int, int]
    square_scales: tuple[Fraction, Fraction, Fraction]

    @property
    def definite(self) -> bool:
        c = self.coeffs
        return all(v > 0 for v in c) or all(v < 0 for v in c)

    def lift(self, X) -> tuple[int, int, int]:
        """Map a reduced-form solution back to a primitive original solution."""
        v = [Fraction(x) / s for x, s in zip(X, self.square_scales)]
        den = 1
        for q in v:
            den = den * q.denominator // gcd(den, q.denominator)
        w = [int(q * den) for q in v]
        g = gcd(gcd(w[0], w[1]), w[2])
        return tuple(x // g for x in w)


_TRIPLES = ((0, 1, 2), (0, 2, 1), (1, 2, 0))


def _check_nonzero(u):
    u = tuple(int(v) for v in u)
    if len(u) != 3 or not all(u):
        raise ValueError(f"expected three nonzero coefficients, got {u}")
    return u


def reduce(raw) -> ReducedForm:
    a = list(_check_nonzero(raw))
    g = gcd(gcd(a[0], a[1]), a[2])
    a = [v // g for v in a]
    sieve = shared_sieve(max(abs(v) for v in a))
    s = [Fraction(1)] * 3
    for i in range(3):
        parts = squarefree_decompose(a[i], sieve)
        a[i] = parts.ell
        s[i] *= parts.z
    changed = True
    while changed:
        changed = False
        for i, j, k in _TRIPLES:
            g = gcd(a[i], a[j])
            if g > 1:
                a[i] //= g
                a[j] //= g
                a[k] *= g
                s[k] /= g
                changed = True
    return ReducedForm(tuple(a), tuple(s))


def has_rational_point(u) -> bool:
    """Legendre's criterion on the reduced form."""
    r = reduce(u)
    if r.definite:
        return False
    c = r.coeffs
    sieve = shared_sieve(max(abs(v) for v in c))
    for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        n = abs(c[i])
        if n == 1:
            continue
        for p in sieve.primes(n):
            if p != 2 and jacobi(-c[j] * c[k], p) != 1:
                return False
    return True


def _unit_solvable(A, p) -> bool:
    """Is sum A_i v_i^2 = 0 solvable with every v_i a p-adic unit?"""
    e = [valuation(a, p) for a in A]
    m = min(e)
    if p == 2:
        return sum(A) % (1 << (m + 3)) == 0
    S = [i for i in range(3) if e[i] == m]
    if len(S) == 1:
        return False
    pm = p**m
    Ap = [a // pm for a in A]
    if len(S) == 2:
        i, j = S
        return jacobi(-Ap[i] * Ap[j], p) == 1
    if p >= 7:
        return True
    sq = [x * x % p for x in range(1, p)]
    return any((Ap[0] * s0 + Ap[1] * s1 + Ap[2] * s2) % p == 0
               for s0 in sq for s1 in sq for s2 in sq)


def _local_pairwise(A, p) -> bool:
    """Is there a p-adic solution with at most one coordinate divisible by p?"""
    if _unit_solvable(A, p):
        return True
    top = (max(valuation(a, p) for a in A) + 3) // 2 + 2
    for k in range(3):
        for gam in range(1, top + 1):
            B = list(A)
            B[k] = A[k] * p ** (2 * gam)
            if _unit_solvable(B, p):
                return True
    return False


def is_soluble(u) -> bool:
    """Solubility in nonzero, pairwise coprime integers.

    Rational solubility alone is not enough when a coefficient has a square
    factor (1 v0^2 + v1^2 - 4 v2^2 has rational points but every primitive
    solution has v0, v1 both even). Such primes get an extra local check.
    """
    u = _check_nonzero(u)
    if not has_rational_point(u):
        return False
    g = gcd(gcd(u[0], u[1]), u[2])
    A = [v // g for v in u]
    sieve = shared_sieve(max(abs(v) for v in A))
    bad = set()
    for a in A:
        for p, e in sieve.factorize(abs(a)).items() if abs(a) > 1 else ():
            if e >= 2:
                bad.add(p)
    return all(_local_pairwise(A, p) for p in sorted(bad))


def rational_point(u):
    """A primitive solution (zeros allowed) found inside the Holzer box of the
    reduced form, or None when the conic has no rational point."""
    r = reduce(u)
    if r.definite:
        return None
    c = r.coeffs
    bounds = (isqrt(abs(c[1] * c[2])), isqrt(abs(c[0] * c[2])), isqrt(abs(c[0] * c[1])))
    X = kernels.conic_search(c[0], c[1], c[2], *bounds, False)
    if X is None:
        return None
    return r.lift(X)


def _ext_dual(P):
    """Integer n with n . P = 1 for primitive P."""
    g01, s, t = _xgcd(P[0], P[1])
    g, a, b = _xgcd(g01, P[2])
    return (a * s, a * t, b)


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class ConicParam:
    """Rational parametrisation of a conic through a primitive point P.

    For coprime (s, t) the vector R(s, t) = -Q(z) P + 2B(P, z) z with
    z = s e1 + t e2 lies on the conic, and every projective point arises from
    exactly one pair (s, t) up to sign. gcd(R(s, t)) divides ``resultant``.
    """

    coeffs: tuple[int, int, int]
    P: tuple[int, int, int]
    e1: tuple[int, int, int]
    e2: tuple[int, int, int]
    l: tuple[int, int]
    q: tuple[int, int, int]
    R: tuple[int, ...]

    @property
    def resultant(self) -> int:
        l1, l2 = self.l
        q11, q12, q22 = self.q
        return abs(q11 * l2 * l2 - q12 * l1 * l2 + q22 * l1 * l1)

    def raw(self, s, t):
        ss, st, tt = s * s, s * t, t * t
        R = self.R
        return tuple(R[3 * i] * ss + R[3 * i + 1] * st + R[3 * i + 2] * tt for i in range(3))

    def point(self, s, t):
        r = self.raw(s, t)
        g = gcd(gcd(r[0], r[1]), r[2])
        return tuple(v // g for v in r)


def parametrize(u, P) -> ConicParam:
    a = _check_nonzero(u)
    P = tuple(int(v) for v in P)
    if sum(ai * pi * pi for ai, pi in zip(a, P)) != 0 or gcd(gcd(P[0], P[1]), P[2]) != 1:
        raise ValueError(f"{P} is not a primitive point of the conic {a}")
    n = _ext_dual(P)
    e1, e2 = kernels.gauss_reduce(*kernels.kernel_basis(*n))

    def bil(x, y):
        return sum(ai * xi * yi for ai, xi, yi in zip(a, x, y))

    l = (2 * bil(P, e1), 2 * bil(P, e2))
    q = (bil(e1, e1), 2 * bil(e1, e2), bil(e2, e2))
    R = []
    for i in range(3):
        R += [-q[0] * P[i] + l[0] * e1[i],
              -q[1] * P[i] + l[0] * e2[i] + l[1] * e1[i],
              -q[2] * P[i] + l[1] * e2[i]]
    return ConicParam(a, P, tuple(e1), tuple(e2), l, q, tuple(R))


def _pairwise_nonzero(v) -> bool:
    return all(v) and gcd(v[0], v[1]) == 1 and gcd(v[0], v[2]) == 1 and gcd(v[1], v[2]) == 1


def _walk(param: ConicParam, radius: int):
    """Points of the parametrisation with max(|s|, |t|) <= radius, in ring order."""
    yield param.point(1, 0)
    for r in range(1, radius + 1):
        for s in range(-r, r + 1):
            for t in ((r,) if abs(s) < r else range(1, r + 1)):
                if gcd(s, t) == 1:
                    yield param.point(s, t)


def find_solution(u, walk_radius: int = 400):
    """Nonzero pairwise coprime solution with positive coordinates, or None."""
    u = _check_nonzero(u)
    P = rational_point(u)
    if has_rational_point(u) != (P is not None):
        raise OracleBug(f"Legendre criterion and Holzer search disagree on {u}")
    if P is None or not is_soluble(u):
        return None
    if _pairwise_nonzero(P):
        return tuple(abs(v) for v in P)
    for y in _walk(parametrize(u, P), walk_radius):
        if _pairwise_nonzero(y):
            return tuple(abs(v) for v in y)
    raise OracleBug(f"{u} judged soluble but no pairwise coprime witness within radius {walk_radius}")


# search-based decision, used to cross-check is_soluble


def _local_refutes(u, p) -> bool:
    """True if no solution mod p^K has at most one coordinate divisible by p.

    Sound refutation of p-adic solubility with that coprimality pattern. One of
    the two unit coordinates is scaled to 1.
    """
    vmax = max(valuation(a, p) for a in u)
    K = vmax + (3 if p == 2 else 1)
    mod = p**K
    r = np.arange(mod, dtype=np.int64)
    sq = (r * r) % mod
    unit = (r % p) != 0
    for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        if u[i] % p == 0:
            continue
        lhs = (u[i] + u[j] * sq[:, None] + u[k] * sq[None, :]) % mod
        ok = (lhs == 0) & (unit[:, None] | unit[None, :])
        if ok.any():
            return False
    return True


def search_decide(u, max_scale: int = 64):
    """Decide pairwise coprime solubility by search alone.

    Returns True with a found witness, False when the Holzer box of the
    (pairwise coprime) form holds no solution or a congruence obstruction is
    exhibited, and None when neither a witness nor a refutation was found.
    """
    u = _check_nonzero(u)
    a, b, c = u
    if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
        raise ValueError("search_decide needs pairwise coprime coefficients")
    if (a > 0) == (b > 0) == (c > 0):
        return False
    H = (isqrt(abs(b * c)), isqrt(abs(a * c)), isqrt(abs(a * b)))
    if kernels.conic_search(a, b, c, *H, False) is None:
        return False
    sieve = shared_sieve(max(abs(v) for v in u))
    for n in u:
        for p, e in sieve.factorize(abs(n)).items() if abs(n) > 1 else ():
            if e >= 2 and _local_refutes(u, p):
                return False
    scale = 1
    while scale <= max_scale:
        w = kernels.conic_search(a, b, c, *(max(1, h) * scale for h in H), True)
        if w is not None:
            return True
        scale *= 4
    return None
