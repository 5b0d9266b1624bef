import math

import pytest
from hypothesis import given, strategies as st

from invariant_lab.arithmetic import (
    MAX_NATURAL,
    NaturalRangeError,
    crt_combine,
    extended_gcd,
    factorize,
    gcd,
    is_prime,
    mod_pow,
)

from oracles import naive_pow

naturals = st.integers(min_value=0, max_value=MAX_NATURAL)


@pytest.mark.parametrize("x, y, g", [(6, 10, 2), (15, 1, 1), (36, 105, 3), (0, 0, 0), (7, 0, 7)])
def test_gcd_examples(x, y, g):
    assert gcd(x, y) == g


def test_gcd_matches_common_divisor_scan():
    for x in range(60):
        for y in range(60):
            common = [d for d in range(1, max(x, y) + 1) if x % d == 0 and y % d == 0]
            assert gcd(x, y) == (max(common) if common else 0)


@pytest.mark.parametrize("x, y, g", [(3, 5, 1), (5, 7, 1), (4, 6, 2)])
def test_extended_gcd_examples(x, y, g):
    got, u, v = extended_gcd(x, y)
    assert got == g
    assert u * x + v * y == g


def test_extended_gcd_rejects_double_zero():
    with pytest.raises(ValueError):
        extended_gcd(0, 0)


@given(naturals, naturals)
def test_gcd_and_bezout(x, y):
    g = gcd(x, y)
    if g:
        assert x % g == 0 and y % g == 0
        g2, u, v = extended_gcd(x, y)
        assert g2 == g and u * x + v * y == g
    else:
        assert x == y == 0


def test_range_errors():
    with pytest.raises(NaturalRangeError):
        gcd(2**64, 3)
    with pytest.raises(NaturalRangeError):
        factorize(-1)
    with pytest.raises(NaturalRangeError):
        mod_pow(2, 3, 2**64)
    assert is_prime(MAX_NATURAL) is False


@pytest.mark.parametrize("base, exp, m, want", [(2, 48, 105, 1), (6, 2, 15, 6), (10, 2, 15, 10), (5, 0, 7, 1), (3, 0, 1, 0)])
def test_mod_pow_examples(base, exp, m, want):
    assert mod_pow(base, exp, m) == want


@pytest.mark.slow
def test_mod_pow_matches_repeated_multiplication():
    for m in range(1, 1001):
        for a in range(m):
            x = 1 % m
            for e in range(65):
                assert mod_pow(a, e, m) == x
                x = x * a % m


def test_naive_pow_oracle_sanity():
    assert naive_pow(2, 12, 105) == 1


@pytest.mark.parametrize(
    "congruences, want",
    [([(0, 3), (1, 35)], (36, 105)), ([(0, 1)], (0, 1)), ([(0, 5), (1, 7)], (15, 35)), ([], (0, 1))],
)
def test_crt_examples(congruences, want):
    assert crt_combine(congruences) == want


def test_crt_names_offending_pair():
    with pytest.raises(ValueError, match="6 and 4"):
        crt_combine([(1, 6), (1, 4)])


def test_crt_rejects_unreduced_remainder():
    with pytest.raises(ValueError):
        crt_combine([(5, 3)])


@given(st.lists(st.tuples(st.integers(0, 10**6), st.integers(1, 10**4)), max_size=5))
def test_crt_reduces_to_each_input(raw):
    pairs = []
    for r, n in raw:
        if all(math.gcd(n, n2) == 1 for _, n2 in pairs):
            pairs.append((r % n, n))
    x, big = crt_combine(pairs)
    assert big == math.prod(n for _, n in pairs)
    assert 0 <= x < big
    for r, n in pairs:
        assert x % n == r


@pytest.mark.parametrize(
    "n, want",
    [(561, ((3, 1), (11, 1), (17, 1))), (105, ((3, 1), (5, 1), (7, 1))), (49, ((7, 2),)), (1, ())],
)
def test_factorize_examples(n, want):
    assert factorize(n).factors == want


@pytest.mark.parametrize(
    "n",
    [2**64 - 59, (2**31 - 1) * (2**32 - 5), 4294967291**2, 2**64 - 1, 10007 * 10009 * 10037, 2**63, 999999999989 * 9973],
)
def test_factorize_large_recomposes(n):
    f = factorize(n)
    assert f.n == n
    assert all(is_prime(p) for p in f.primes)
    assert list(f.primes) == sorted(set(f.primes))


@pytest.mark.slow
def test_factorize_matches_sieve_up_to_a_million(sieve_1e6):
    for n in range(1, 10**6 + 1):
        f = factorize(n)
        want = {}
        k = n
        while k > 1:
            p = sieve_1e6[k]
            want[p] = want.get(p, 0) + 1
            k //= p
        assert f.factors == tuple(sorted(want.items()))
        assert f.omega == len(want)


@pytest.mark.parametrize("n, want", [(2, True), (561, False), (15, False), (0, False), (1, False)])
def test_is_prime_examples(n, want):
    assert is_prime(n) is want


@pytest.mark.slow
def test_is_prime_matches_sieve(sieve_1e6):
    for n in range(10**6 + 1):
        assert is_prime(n) == (n >= 2 and sieve_1e6[n] == n)


@pytest.mark.parametrize(
    "n",
    # strong pseudoprimes to several small bases
    [2047, 3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051, 318665857834031151167461],
)
def test_is_prime_rejects_strong_pseudoprimes(n):
    if n > MAX_NATURAL:
        with pytest.raises(NaturalRangeError):
            is_prime(n)
    else:
        assert is_prime(n) is False


def test_factorization_render():
    assert factorize(561).render() == "3*11*17"
    assert factorize(72).render() == "2^3*3^2"
    assert factorize(1).render() == "1"
