"""Exact counts of rational points of bounded height on the biprojective
threefold x0 y0^2 + x1 y1^2 + x2 y2^2 = 0 in P^2 x P^2."""

from .counting import CountRecord, count_brute, count_fiber, count_total, sk_exact, sk_mainterm
from .kernels import BACKEND
from .param import ParamTuple, count_T, decompose, recompose, validate
from .projective import BiPoint, ProjPoint, biheight, height

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BiPoint", "CountRecord", "ParamTuple", "ProjPoint", "biheight", "count_T",
    "count_brute", "count_fiber", "count_total", "decompose", "height", "recompose",
    "sk_exact", "sk_mainterm", "validate",
]
