"""gcd parametrisation of the points: every (x, y) is written uniquely as
x_i = h_i^2 f_j g_j^2 f_k g_k^2 u_i and y_i = h_j h_k f_i g_i v_i
with f u v on the twisted conic f0 u0 v0^2 + f1 u1 v1^2 + f2 u2 v2^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import kernels
from .counting import icbrt

_OTHERS = ((1, 2), (0, 2), (0, 1))


@dataclass(frozen=True)
class ParamTuple:
    f: tuple[int, int, int]
    g: tuple[int, int, int]
    h: tuple[int, int, int]
    u: tuple[int, int, int]
    v: tuple[int, int, int]

    def x_weights(self):
        f, g, h = self.f, self.g, self.h
        return tuple(h[i] ** 2 * f[j] * g[j] ** 2 * f[k] * g[k] ** 2 for i, (j, k) in enumerate(_OTHERS))

    def y_weights(self):
        f, g, h = self.f, self.g, self.h
        return tuple(f[i] * g[i] * h[j] * h[k] for i, (j, k) in enumerate(_OTHERS))

    def heights(self):
        hx = max(a * abs(c) for a, c in zip(self.x_weights(), self.u))
        hy = max(a * abs(c) for a, c in zip(self.y_weights(), self.v))
        return hx, hy


class DecompositionError(ValueError):
    """A divisibility step of the decomposition failed."""


def _exact(a, b, what):
    if b == 0 or a % b:
        raise DecompositionError(f"{what}: {b} does not divide {a}")
    return a // b


def decompose(x, y) -> ParamTuple:
    x = tuple(int(c) for c in x)
    y = tuple(int(c) for c in y)
    if not (all(x) and all(y)):
        raise DecompositionError("coordinates must be nonzero")
    if gcd(gcd(x[0], x[1]), x[2]) != 1 or gcd(gcd(y[0], y[1]), y[2]) != 1:
        raise DecompositionError("x and y must be primitive")
    if sum(a * b * b for a, b in zip(x, y)):
        raise DecompositionError("point is not on the variety")
    h = tuple(gcd(y[j], y[k]) for j, k in _OTHERS)
    yp = tuple(_exact(y[i], h[j] * h[k], "h_j h_k | y_i") for i, (j, k) in enumerate(_OTHERS))
    xp = tuple(_exact(x[i], h[i] ** 2, "h_i^2 | x_i") for i in range(3))
    X = tuple(gcd(xp[j], xp[k]) for j, k in _OTHERS)
    u = tuple(_exact(xp[i], X[j] * X[k], "X_j X_k | x_i'") for i, (j, k) in enumerate(_OTHERS))
    g = tuple(X[i] // gcd(X[i], yp[i]) for i in range(3))
    f = tuple(_exact(X[i], g[i] ** 2, "g_i^2 | X_i") for i in range(3))
    v = tuple(_exact(yp[i], f[i] * g[i], "f_i g_i | y_i'") for i in range(3))
    return ParamTuple(f, g, h, u, v)


def recompose(t: ParamTuple):
    xw, yw = t.x_weights(), t.y_weights()
    return tuple(a * c for a, c in zip(xw, t.u)), tuple(a * c for a, c in zip(yw, t.v))


def _fgh_ok(f, g, h) -> bool:
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            if gcd(f[i], f[j] * g[j] * h[i]) != 1:
                return False
            if gcd(g[i], g[j] * h[i]) != 1:
                return False
            if gcd(h[i], h[j]) != 1:
                return False
    return True


def validate(t: ParamTuple) -> bool:
    """Every listed coprimality condition, the equation, and positivity."""
    f, g, h, u, v = t.f, t.g, t.h, t.u, t.v
    if min(f + g + h) < 1 or not all(u) or not all(v):
        return False
    if sum(f[i] * u[i] * v[i] ** 2 for i in range(3)):
        return False
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            if gcd(f[i], f[j] * g[j] * h[i] * u[i] * v[j]) != 1:
                return False
            if gcd(g[i], g[j] * h[i] * u[i] * v[i] * v[j]) != 1:
                return False
            if gcd(h[i], h[j] * v[i]) != 1:
                return False
            if gcd(u[i], u[j]) != 1 or gcd(v[i], v[j]) != 1:
                return False
    return True


def _height_floor(f, g, h):
    A = [h[i] ** 2 * f[j] * g[j] ** 2 * f[k] * g[k] ** 2 for i, (j, k) in enumerate(_OTHERS)]
    C = [f[i] * g[i] * h[j] * h[k] for i, (j, k) in enumerate(_OTHERS)]
    return max(A) ** 2 * max(C)


def fgh_triples(B: int):
    """(f, g, h) satisfying the u, v-free conditions whose smallest height is <= B."""
    vals = [1] * 9  # h0 h1 h2 f0 f1 f2 g0 g1 g2

    def floor_of(vs):
        return _height_floor(vs[3:6], vs[6:9], vs[0:3])

    def rec(pos):
        if pos == 9:
            f, g, h = tuple(vals[3:6]), tuple(vals[6:9]), tuple(vals[0:3])
            if _fgh_ok(f, g, h):
                yield f, g, h
            return
        n = 1
        while True:
            vals[pos] = n
            if floor_of(vals) > B:
                break
            yield from rec(pos + 1)
            n += 1
        vals[pos] = 1

    yield from rec(0)


FULL_SIGN_LIMIT = 2**12


def count_T(B: int, signs: str = "auto", collect: bool = False):
    """Number of tuples with all conditions and height <= B, by direct enumeration.

    ``signs="full"`` visits every sign pattern of u and v; ``"symmetric"``
    visits u0 > 0, v > 0 only and multiplies by the 16 sign changes
    (u -> -u, v_i -> -v_i), all of which preserve every condition.
    ``"auto"`` uses the full enumeration up to FULL_SIGN_LIMIT.
    """
    if B < 1:
        raise ValueError("B must be positive")
    if signs == "auto":
        signs = "full" if B <= FULL_SIGN_LIMIT else "symmetric"
    if signs not in ("full", "symmetric"):
        raise ValueError(f"unknown sign mode {signs!r}")
    full = signs == "full"
    if collect and not full:
        raise ValueError("collecting tuples needs the full sign enumeration")
    Tp = icbrt(B)
    total = 0
    out = []
    for f, g, h in fgh_triples(B):
        if collect:
            n, pairs = kernels.param_inner(f, g, h, B, Tp, True, True)
            out += [ParamTuple(f, g, h, tuple(u), tuple(v)) for u, v in pairs]
        else:
            n = kernels.param_inner(f, g, h, B, Tp, full, False)
        total += n if full else 16 * n
    return (total, out) if collect else total
