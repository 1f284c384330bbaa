from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from biform.counting import brute_points, count_brute
from biform.param import (DecompositionError, ParamTuple, count_T, decompose, fgh_triples, recompose,
                          validate)

ONE = (1, 1, 1)


def test_decompose_examples():
    assert decompose((1, 1, -2), (1, 1, 1)) == ParamTuple(ONE, ONE, ONE, (1, 1, -2), ONE)
    assert decompose((1, 9, -8), (6, 2, 3)) == ParamTuple(ONE, ONE, (1, 3, 2), (1, 1, -2), ONE)
    assert decompose((4, 8, -3), (1, 1, 2)) == ParamTuple(ONE, (1, 1, 2), ONE, (1, 2, -3), ONE)


def test_recompose_examples():
    assert recompose(ParamTuple(ONE, ONE, ONE, (1, 1, -2), ONE)) == ((1, 1, -2), ONE)
    assert recompose(ParamTuple(ONE, (1, 1, 2), ONE, (1, 2, -3), ONE)) == ((4, 8, -3), (1, 1, 2))
    assert recompose(ParamTuple(ONE, ONE, (1, 3, 2), (1, 1, -2), ONE)) == ((1, 9, -8), (6, 2, 3))


def test_validate_examples():
    ident = ParamTuple(ONE, ONE, ONE, (1, 1, -2), ONE)
    assert validate(ident)
    assert not validate(ParamTuple(ONE, ONE, ONE, (2, 2, -4), ONE))
    # g0 -> 2 still satisfies every condition: it recomposes to x = (1, 4, -8), y = (2, 1, 1)
    bumped = ParamTuple(ONE, (2, 1, 1), ONE, (1, 1, -2), ONE)
    assert validate(bumped)
    x, y = recompose(bumped)
    assert (x, y) == ((1, 4, -8), (2, 1, 1))
    assert decompose(x, y) == bumped


def test_decompose_rejects_bad_points():
    with pytest.raises(DecompositionError):
        decompose((1, 1, -3), (1, 1, 1))
    with pytest.raises(DecompositionError):
        decompose((2, 2, -4), (1, 1, 1))
    with pytest.raises(DecompositionError):
        decompose((1, 1, 0), (1, 1, 1))


def test_count_T_examples(backend):
    assert count_T(4) == 48
    assert count_T(3) == 0
    assert count_T(100) == 4 * count_brute(100).count


@pytest.mark.parametrize("B", [500, 3000])
def test_sign_modes_agree(backend, B):
    assert count_T(B, signs="full") == count_T(B, signs="symmetric")


def test_symmetric_mode_above_full_limit():
    assert count_T(5000) == 4 * count_brute(5000).count


def test_collected_tuples_are_the_points():
    total, tuples = count_T(300, collect=True)
    assert total == len(tuples) == len(set(tuples))
    pts = set()
    for t in tuples:
        assert validate(t)
        x, y = recompose(t)
        assert max(abs(c) for c in x) ** 2 * max(abs(c) for c in y) <= 300
        pts.add((x, y))
    # each projective pair (x, y) is hit by its 4 sign representatives
    assert len(pts) == total
    normalized = {(tuple(c * (1 if x[0] > 0 else -1) for c in x), tuple(c * (1 if y[0] > 0 else -1) for c in y))
                  for x, y in pts}
    assert normalized == {(p.coords, q.coords) for p, q in brute_points(300)}


def test_fgh_triples_are_coprime():
    for f, g, h in fgh_triples(2000):
        for i in range(3):
            for j in range(3):
                if i != j:
                    assert gcd(h[i], h[j]) == 1 and gcd(f[i], f[j]) == 1


@settings(max_examples=200, deadline=None)
@given(st.tuples(*[st.integers(-30, 30).filter(bool)] * 3), st.tuples(*[st.integers(-30, 30).filter(bool)] * 3))
def test_decompose_roundtrip(x, y):
    if gcd(gcd(*x[:2]), x[2]) != 1 or gcd(gcd(*y[:2]), y[2]) != 1:
        return
    # move onto the variety by solving for x2 when possible
    num = -(x[0] * y[0] ** 2 + x[1] * y[1] ** 2)
    if num % (y[2] ** 2):
        return
    x = (x[0], x[1], num // y[2] ** 2)
    if x[2] == 0 or gcd(gcd(*x[:2]), x[2]) != 1:
        return
    t = decompose(x, y)
    assert validate(t)
    assert recompose(t) == (x, y)
