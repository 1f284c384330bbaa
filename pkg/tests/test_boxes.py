import math
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from biform.boxes import (Box3, count_linear_box, count_mixed_box, count_quadratic_box, dyadic_grid,
                          lemma1_envelope, lemma1_report, lemma2_envelope, lemma4_envelope, m_eps, tf_sum)
from biform.conic import is_soluble, search_decide

primitive = st.tuples(*[st.integers(-20, 20)] * 3).filter(lambda w: gcd(gcd(w[0], w[1]), w[2]) == 1)
sides = st.tuples(*[st.integers(1, 12)] * 3)


def test_box_validation():
    with pytest.raises(ValueError):
        Box3((0.5, 1, 1))
    assert Box3((2.7, 1, 3)).floors == (2, 1, 3)


def test_linear_box_examples():
    assert count_linear_box((1, 1, 1), (2, 2, 2)) == 12
    assert count_linear_box((1, 2, 3), (1, 1, 1)) == 2
    naive = sum(1 for a in range(-5, 6) for b in range(-5, 6) if gcd(a, b) == 1)
    assert count_linear_box((1, 0, 0), (5, 5, 5)) == naive


def test_linear_nonzero_variant():
    # (1, 1, 1) in the box 2^3: the six vectors with a zero entry are +-(1, -1, 0) and permutations
    assert count_linear_box((1, 1, 1), (2, 2, 2), nonzero=True) == 6


def test_lemma1_envelope_examples():
    assert lemma1_envelope((1, 1, 1), (2, 2, 2)) == pytest.approx(154.80, abs=0.01)
    assert lemma1_envelope((1, 1, 1), (1, 1, 1)) == pytest.approx(41.70, abs=0.01)
    assert lemma1_envelope((10**9, 1, 1), (1, 1, 1)) == pytest.approx(4, abs=1e-6)


@settings(max_examples=200, deadline=None)
@given(primitive, sides)
def test_lemma1_bound_holds(w, U):
    r = lemma1_report(w, U)
    assert r.observed <= r.envelope


def test_quadratic_box_examples():
    assert count_quadratic_box((1, 1, -2), (1, 1, 1)) == 8
    assert count_quadratic_box((1, 1, -3), (30, 30, 30)) == 0
    assert count_quadratic_box((1, 1, 1), (30, 30, 30)) == 0


def test_lemma2_envelope_examples():
    assert lemma2_envelope((1, 1, -2), (1, 1, 1)) == pytest.approx(2 * 1.5 ** (1 / 3))
    assert lemma2_envelope((1, 1, -1), (8, 8, 8)) == pytest.approx(513 ** (1 / 3))
    ratio = count_quadratic_box((1, 1, -2), (1, 1, 1)) / lemma2_envelope((1, 1, -2), (1, 1, 1))
    assert ratio == pytest.approx(3.49, abs=0.01)


def test_m_eps_examples():
    assert m_eps((1, 1, 1), 1 / 6) == pytest.approx(1 + math.log(2))
    assert m_eps((math.e / 2, 1, 1), 0.5) == pytest.approx(2)
    assert m_eps((100, 100, 100), 1 / 6) == pytest.approx(1 + 100 ** (-2 / 3) * math.log(200))
    with pytest.raises(ValueError):
        m_eps((1, 1, 1), 0)


def test_tf_sum_examples():
    assert tf_sum((1, 1, 1), (1, 1, 1)) == 6
    naive = 0
    for u0 in (-2, -1, 1, 2):
        for u1 in (-2, -1, 1, 2):
            for u2 in (-2, -1, 1, 2):
                u = (u0, u1, u2)
                if gcd(u0, u1) == gcd(u0, u2) == gcd(u1, u2) == 1 and search_decide(u):
                    naive += 2 ** len({p for p in (2,) if (u0 * u1 * u2) % p == 0})
    assert tf_sum((1, 1, 1), (2, 2, 2)) == naive
    naive = sum(1 for s in [(a, b, c) for a in (-1, 1) for b in (-1, 1) for c in (-1, 1)]
                if search_decide((s[0], s[1], -3 * s[2])))
    assert tf_sum((1, 1, -3), (1, 1, 1)) == naive


def test_tf_sum_without_solubility_counts_all():
    # 8 sign patterns of (1, 1, 1), weight 1 each
    assert tf_sum((1, 1, 1), (1, 1, 1), require_soluble=False) == 8


def test_mixed_box_examples():
    assert count_mixed_box((1, 1, 1), (1, 1, 1), (1, 1, 1)) == 0
    assert count_mixed_box((1, 1, -2), (1, 1, 1), (1, 1, 1)) == 16
    assert count_mixed_box((1, 1, 1), (2, 2, 2), (1, 1, 1)) == 48


def test_lemma4_envelope_examples():
    assert lemma4_envelope((1, 1, 1), (1, 1, 1), (1, 1, 1)) == pytest.approx(1 + math.log(2))
    assert lemma4_envelope((1, 1, -2), (1, 1, 1), (8, 8, 8)) == pytest.approx(8 * 2 ** (1 / 6) * (1 + math.log(2)))


def test_dyadic_grid_sizes():
    assert len(dyadic_grid(0)) == 1 and dyadic_grid(0)[0].bounds == (1.0, 1.0, 1.0)
    assert len(dyadic_grid(1)) == 8
    assert len(dyadic_grid(2)) == 27


def test_box_inputs_validated():
    with pytest.raises(ValueError):
        count_linear_box((2, 4, 6), (3, 3, 3))
    with pytest.raises(ValueError):
        count_quadratic_box((2, 2, -1), (3, 3, 3))
