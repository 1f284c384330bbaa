from math import gcd

import pytest
from hypothesis import assume, given, strategies as st

from biform.projective import (D1, D2, BiPoint, InvalidPoint, ProjPoint, VarietyParams, biheight,
                               height, normalize, on_open_variety)

triples = st.tuples(*[st.integers(-50, 50)] * 3).filter(any)


def test_normalize_examples():
    assert normalize((2, 4, 6)).coords == (1, 2, 3)
    assert normalize((-1, 2, -3)).coords == (1, -2, 3)
    assert normalize((0, -2, 4)).coords == (0, 1, -2)


def test_normalize_rejects_zero():
    with pytest.raises(InvalidPoint):
        normalize((0, 0, 0))


def test_projpoint_rejects_non_normalized():
    for bad in ((2, 4, 6), (-1, 2, 3), (0, 0, 0)):
        with pytest.raises(InvalidPoint):
            ProjPoint(bad)


def test_height_examples():
    assert height(normalize((1, 2, 3))) == 3
    assert height(normalize((1, 0, 0))) == 1
    assert height(normalize((1, -5, 2))) == 5


def test_biheight_examples():
    assert biheight(BiPoint.of((1, 1, -2), (1, 1, 1)), D2) == 4
    assert biheight(BiPoint.of((1, 1, -5), (1, 2, 1)), D2) == 50
    assert biheight(BiPoint.of((1, 1, -2), (1, 1, 1)), D1) == 4


def test_on_open_variety_examples():
    assert on_open_variety(BiPoint.of((1, 1, -2), (1, 1, 1)))
    assert not on_open_variety(BiPoint.of((1, -1, 0), (1, 1, 1)))
    assert on_open_variety(BiPoint.of((1, 9, -8), (6, 2, 3)))


def test_unsupported_params():
    with pytest.raises(ValueError):
        VarietyParams(3, 2)


@given(triples, st.integers(-9, 9).filter(bool))
def test_normalize_is_scale_invariant(v, s):
    p = normalize(v)
    assert normalize(tuple(s * c for c in v)) == p
    assert gcd(*p.coords) == 1 and next(c for c in p if c) > 0
    assert normalize(p.coords) == p


@given(triples, triples)
def test_biheight_is_height_product(x, y):
    p = BiPoint.of(x, y)
    assume(p.hx > 0)
    assert biheight(p) == height(p.x) ** 2 * height(p.y)
    assert biheight(p, D1) == height(p.x) ** 2 * height(p.y) ** 2
