from math import gcd

import pytest
from hypothesis import given, strategies as st
from sympy import divisors as sym_divisors, factorint, jacobi_symbol, mobius as sym_mobius

from biform.arith import (FactorSieve, SieveTooSmall, divisor_stats, divisors, gcd_many, jacobi,
                          mobius, modinv, shared_sieve, squarefree_decompose, valuation)

SIEVE = FactorSieve(10**5)


def test_gcd_many_examples():
    assert gcd_many([6, 10, 15]) == 1
    assert gcd_many([0, 0, 7]) == 7
    assert gcd_many([-4, 6]) == 2


def test_mobius_examples():
    assert [mobius(n, SIEVE) for n in (1, 4, 30)] == [1, 0, -1]


def test_divisor_stats_examples():
    assert divisor_stats(1, SIEVE) == (0, 1)
    assert divisor_stats(12, SIEVE) == (2, 6)
    assert divisor_stats(30, SIEVE) == (3, 8)


def test_squarefree_examples():
    assert (squarefree_decompose(12, SIEVE).z, squarefree_decompose(12, SIEVE).ell) == (2, 3)
    assert (squarefree_decompose(-18, SIEVE).z, squarefree_decompose(-18, SIEVE).ell) == (3, -2)
    assert (squarefree_decompose(1, SIEVE).z, squarefree_decompose(1, SIEVE).ell) == (1, 1)


def test_jacobi_examples():
    assert jacobi(1, 3) == 1
    assert jacobi(2, 15) == 1
    assert jacobi(3, 9) == 0


def test_sieve_too_small():
    with pytest.raises(SieveTooSmall):
        FactorSieve(100).factorize(10**6 + 3)


def test_shared_sieve_grows():
    assert shared_sieve(5000).limit >= 5000


@given(st.integers(1, 10**5 - 1))
def test_arith_functions_match_sympy(n):
    fac = factorint(n)
    assert SIEVE.factorize(n) == fac
    assert mobius(n, SIEVE) == sym_mobius(n)
    tau = 1
    for e in fac.values():
        tau *= e + 1
    assert divisor_stats(n, SIEVE) == (len(fac), tau)
    assert divisors(n, SIEVE) == sym_divisors(n)


@given(st.integers(-10**4, 10**4).filter(bool))
def test_squarefree_decomposition_is_unique(u):
    p = squarefree_decompose(u, SIEVE)
    assert p.z > 0 and p.z * p.z * p.ell == u
    assert mobius(abs(p.ell), SIEVE) != 0


@given(st.integers(-500, 500), st.integers(0, 200))
def test_jacobi_matches_sympy(a, k):
    n = 2 * k + 1
    assert jacobi(a, n) == jacobi_symbol(a % n, n)


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_valuation(n, p):
    v = valuation(n, p)
    assert n % p**v == 0 and n % p ** (v + 1) != 0


@given(st.integers(-1000, 1000), st.integers(2, 1000))
def test_modinv(a, m):
    if gcd(a, m) == 1:
        assert a * modinv(a, m) % m == 1
    else:
        with pytest.raises(ValueError):
            modinv(a, m)
