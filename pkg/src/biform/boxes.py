"""Vectors in boxes: linear, quadratic and mixed equations, with the envelope
formulas bounding their counts and the dyadic grids used to sample them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from math import gcd

from . import kernels
from .arith import divisor_stats, shared_sieve
from .conic import is_soluble


@dataclass(frozen=True)
class Box3:
    bounds: tuple[float, float, float]

    def __post_init__(self):
        b = tuple(self.bounds)
        if len(b) != 3 or min(b) < 1:
            raise ValueError(f"box bounds must be three reals >= 1, got {b}")
        object.__setattr__(self, "bounds", b)

    @property
    def floors(self) -> tuple[int, int, int]:
        return tuple(math.floor(v) for v in self.bounds)

    @property
    def volume(self) -> float:
        return self.bounds[0] * self.bounds[1] * self.bounds[2]


def as_box(b) -> Box3:
    return b if isinstance(b, Box3) else Box3(tuple(b))


@dataclass
class EnvelopeReport:
    observed: int
    envelope: float
    ratio: float
    inputs: dict = field(default_factory=dict)


def make_report(observed, envelope, **inputs) -> EnvelopeReport:
    ratio = observed / envelope if envelope > 0 else math.inf
    return EnvelopeReport(observed, envelope, ratio, inputs)


def _primitive(w):
    w = tuple(int(v) for v in w)
    if len(w) != 3 or gcd(gcd(w[0], w[1]), w[2]) != 1:
        raise ValueError(f"expected a primitive triple, got {w}")
    return w


def _pairwise_coprime_nonzero(u):
    u = tuple(int(v) for v in u)
    if len(u) != 3 or not all(u):
        raise ValueError(f"expected three nonzero entries, got {u}")
    if gcd(u[0], u[1]) != 1 or gcd(u[0], u[2]) != 1 or gcd(u[1], u[2]) != 1:
        raise ValueError(f"entries must be pairwise coprime, got {u}")
    return u


def count_linear_box(w, box, nonzero: bool = False) -> int:
    """Primitive u in the box with u . w = 0 (both signs counted).

    ``nonzero`` drops the vectors with a zero coordinate; each such vector
    spans the line w^perp meet {u_i = 0}, so there are at most six of them.
    """
    w = _primitive(w)
    U = as_box(box).floors
    n = kernels.linear_box_count(*w, *U)
    if nonzero:
        axis = set()
        for i in range(3):
            e = [0, 0, 0]
            e[i] = 1
            c = (w[1] * e[2] - w[2] * e[1], w[2] * e[0] - w[0] * e[2], w[0] * e[1] - w[1] * e[0])
            g = gcd(gcd(c[0], c[1]), c[2])
            if g == 0:
                continue
            p = tuple(v // g for v in c)
            if all(abs(p[j]) <= U[j] for j in range(3)):
                axis.add(p)
                axis.add(tuple(-v for v in p))
        n -= len(axis)
    return n


def lemma1_envelope(w, box) -> float:
    w = _primitive(w)
    U = as_box(box).bounds
    return 12 * math.pi * U[0] * U[1] * U[2] / max(abs(w[i]) * U[i] for i in range(3)) + 4


def count_quadratic_box(u, box) -> int:
    """Primitive v in the box (zeros allowed) with sum u_i v_i^2 = 0."""
    u = _pairwise_coprime_nonzero(u)
    return kernels.quadratic_box_count(*u, *as_box(box).floors)


def lemma2_envelope(u, box, tau_of_product: int | None = None) -> float:
    u = _pairwise_coprime_nonzero(u)
    V = as_box(box).bounds
    prod = abs(u[0] * u[1] * u[2])
    if tau_of_product is None:
        tau_of_product = divisor_stats(prod, shared_sieve(prod))[1]
    return (V[0] * V[1] * V[2] / prod + 1) ** (1 / 3) * tau_of_product


def m_eps(box, eps: float) -> float:
    if eps <= 0:
        raise ValueError("eps must be positive")
    U = as_box(box).bounds
    best = max((U[i] * U[j]) ** (-0.5 + eps) * math.log(2 * U[k])
               for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 2, 0)))
    return 1 + best


def _coprime_triples(U):
    for u0 in range(-U[0], U[0] + 1):
        if u0 == 0:
            continue
        for u1 in range(-U[1], U[1] + 1):
            if u1 == 0 or gcd(u0, u1) != 1:
                continue
            for u2 in range(-U[2], U[2] + 1):
                if u2 and gcd(u0, u2) == 1 and gcd(u1, u2) == 1:
                    yield u0, u1, u2


def tf_sum(f, box, oracle=is_soluble, require_soluble: bool = True) -> int:
    """Sum of 2^omega(|u0 u1 u2|) over pairwise coprime nonzero u in the box
    for which f0 u0 v0^2 + f1 u1 v1^2 + f2 u2 v2^2 = 0 has a nonzero pairwise
    coprime solution v. ``require_soluble=False`` drops that condition."""
    f = _pairwise_coprime_nonzero(f)
    U = as_box(box).floors
    sieve = shared_sieve(max(1, abs(U[0] * U[1] * U[2])))
    total = 0
    for u in _coprime_triples(U):
        if require_soluble and not oracle((f[0] * u[0], f[1] * u[1], f[2] * u[2])):
            continue
        total += 1 << divisor_stats(abs(u[0] * u[1] * u[2]), sieve)[0]
    return total


def lemma3_report(f, box, eps: float = 1 / 6) -> EnvelopeReport:
    f = _pairwise_coprime_nonzero(f)
    b = as_box(box)
    env = abs(f[0] * f[1] * f[2]) ** eps * b.volume * m_eps(b, eps)
    return make_report(tf_sum(f, b), env, f=f, box=b.bounds, eps=eps)


def count_mixed_box(f, ubox, vbox) -> int:
    """Pairs (u, v) of nonzero triples in the boxes with sum f_i u_i v_i^2 = 0
    and gcd(u_i v_i, u_j v_j) = 1 for i != j."""
    f = _pairwise_coprime_nonzero(f)
    return kernels.mixed_box_count(*f, *as_box(ubox).floors, *as_box(vbox).floors)


def lemma4_envelope(f, ubox, vbox, eps: float = 1 / 6) -> float:
    f = _pairwise_coprime_nonzero(f)
    ub, vb = as_box(ubox), as_box(vbox)
    return abs(f[0] * f[1] * f[2]) ** eps * ub.volume ** (2 / 3) * vb.volume ** (1 / 3) * m_eps(ub, eps)


def dyadic_grid(maxpow: int) -> list[Box3]:
    if not 0 <= maxpow <= 20:
        raise ValueError("maxpow must lie in 0..20")
    sides = [float(2**k) for k in range(maxpow + 1)]
    return [Box3(b) for b in product(sides, repeat=3)]


def lemma1_report(w, box) -> EnvelopeReport:
    b = as_box(box)
    return make_report(count_linear_box(w, b), lemma1_envelope(w, b), w=tuple(w), box=b.bounds)


def lemma2_report(u, box) -> EnvelopeReport:
    b = as_box(box)
    return make_report(count_quadratic_box(u, b), lemma2_envelope(u, b), u=tuple(u), box=b.bounds)


def lemma4_report(f, ubox, vbox, eps: float = 1 / 6) -> EnvelopeReport:
    ub, vb = as_box(ubox), as_box(vbox)
    return make_report(count_mixed_box(f, ub, vb), lemma4_envelope(f, ub, vb, eps),
                       f=tuple(f), ubox=ub.bounds, vbox=vb.bounds, eps=eps)
