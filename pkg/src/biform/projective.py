"""Points of P^2(Q), the naive and anticanonical heights, and membership in U."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

INT128_MAX = (1 << 127) - 1


class InvalidPoint(ValueError):
    pass


class BoundTooLarge(OverflowError):
    pass


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Primitive integer triple whose first nonzero coordinate is positive."""

    coords: tuple[int, int, int]

    def __post_init__(self):
        c = self.coords
        if len(c) != 3 or not any(c):
            raise InvalidPoint(f"not a point of P^2: {c}")
        if math.gcd(*c) != 1:
            raise InvalidPoint(f"coordinates not coprime: {c}")
        first = next(v for v in c if v)
        if first < 0:
            raise InvalidPoint(f"first nonzero coordinate negative: {c}")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


@dataclass(frozen=True)
class VarietyParams:
    n: int = 2
    d: int = 2

    def __post_init__(self):
        if self.n != 2 or self.d not in (1, 2):
            raise ValueError(f"only n=2 and d in (1, 2) are supported, got n={self.n}, d={self.d}")


D2 = VarietyParams(2, 2)
D1 = VarietyParams(2, 1)


def normalize(raw) -> ProjPoint:
    raw = tuple(int(v) for v in raw)
    g = math.gcd(*raw)
    if g == 0:
        raise InvalidPoint("all-zero triple")
    v = tuple(c // g for c in raw)
    if next(c for c in v if c) < 0:
        v = tuple(-c for c in v)
    return ProjPoint(v)


def height(p) -> int:
    return max(abs(c) for c in p)


@dataclass(frozen=True)
class BiPoint:
    x: ProjPoint
    y: ProjPoint
    hx: int = field(default=0, compare=False)
    hy: int = field(default=0, compare=False)

    def __post_init__(self):
        if not self.hx:
            object.__setattr__(self, "hx", height(self.x))
        if not self.hy:
            object.__setattr__(self, "hy", height(self.y))
        if self.hx != height(self.x) or self.hy != height(self.y):
            raise ValueError("cached heights do not match the coordinates")

    @classmethod
    def of(cls, x, y) -> "BiPoint":
        return cls(normalize(x), normalize(y))


def biheight(p: BiPoint, params: VarietyParams = D2) -> int:
    """H(x)^2 * H(y)^(3 - d)."""
    h = p.hx**2 * p.hy ** (3 - params.d)
    if h > INT128_MAX:
        raise BoundTooLarge(f"anticanonical height {h} exceeds 128 bits")
    return h


def form_value(x, y, d: int = 2) -> int:
    return sum(xi * yi**d for xi, yi in zip(x, y))


def on_open_variety(p: BiPoint, params: VarietyParams = D2) -> bool:
    if not all(p.x) or not all(p.y):
        return False
    return form_value(p.x, p.y, params.d) == 0
