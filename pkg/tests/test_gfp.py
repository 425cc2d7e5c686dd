"""Prime field arithmetic: primality, inverses, squares, quadratics."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilword.gfp import PrimeField, is_prime

PRIMES = [3, 5, 7, 11, 13, 17, 97, 101]


def test_is_prime_knowns():
    assert is_prime(2)
    assert is_prime(3)
    assert is_prime(2**31 - 1)
    assert is_prime(10**9 + 7)
    assert not is_prime(1)
    assert not is_prime(561)  # Carmichael number
    assert not is_prime(2**31 - 3)
    assert not is_prime(0)
    assert not is_prime(-7)


@pytest.mark.parametrize("bad", [0, 1, 2, 4, 9, 15, 2**31 + 11])
def test_field_rejects_bad_modulus(bad):
    with pytest.raises(ValueError):
        PrimeField(bad)


def test_field_basics():
    F = PrimeField(7)
    assert F.element(10) == 3
    assert F.add(5, 4) == 2
    assert F.sub(2, 5) == 4
    assert F.mul(3, 5) == 1
    assert F.neg(3) == 4
    assert list(F.elements()) == list(range(7))
    assert list(F.units()) == list(range(1, 7))


@pytest.mark.parametrize("p", PRIMES)
def test_inverses_exhaustive(p):
    F = PrimeField(p)
    for a in F.units():
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(1, a) == F.inv(a)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@pytest.mark.parametrize("p", PRIMES)
def test_squares_match_direct_enumeration(p):
    F = PrimeField(p)
    squares = {(a * a) % p for a in range(p)}
    for a in range(p):
        assert F.is_square(a) == (a in squares)
    # 0 plus half the units
    assert sum(F.is_square(a) for a in range(p)) == (p + 1) // 2


def test_find_nonsquare_smallest():
    assert PrimeField(3).find_nonsquare() == 2
    assert PrimeField(5).find_nonsquare() == 2
    assert PrimeField(7).find_nonsquare() == 3
    assert PrimeField(17).find_nonsquare() == 3
    for p in PRIMES:
        F = PrimeField(p)
        r = F.find_nonsquare()
        assert not F.is_square(r)
        assert all(F.is_square(a) for a in range(r) if a)


@pytest.mark.parametrize("p", PRIMES)  # covers both p % 4 branches
def test_sqrt_exhaustive(p):
    F = PrimeField(p)
    for a in range(p):
        r = F.sqrt(a)
        if F.is_square(a):
            assert r is not None and (r * r) % p == a
        else:
            assert r is None


@pytest.mark.parametrize("p", [3, 5, 7])
def test_solve_quadratic_exhaustive(p):
    F = PrimeField(p)
    for a in range(p):
        for b in range(p):
            for c in range(p):
                if a == b == c == 0:
                    with pytest.raises(ValueError):
                        F.solve_quadratic(a, b, c)
                    continue
                roots = F.solve_quadratic(a, b, c)
                brute = {x for x in range(p) if (a * x * x + b * x + c) % p == 0}
                assert roots == brute


@settings(max_examples=200, deadline=None)
@given(p=st.sampled_from(PRIMES), a=st.integers(0, 10**6),
       b=st.integers(0, 10**6), c=st.integers(0, 10**6))
def test_ring_axioms(p, a, b, c):
    F = PrimeField(p)
    a, b, c = F.element(a), F.element(b), F.element(c)
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(F.inv(a), F.mul(a, b)) == b
