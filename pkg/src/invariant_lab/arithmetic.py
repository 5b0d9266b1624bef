"""Exact integer and modular arithmetic primitives.

Every public entry point works on non-negative integers below 2**64.  Python
integers never wrap, so intermediate products are exact; the range check
exists so that inputs outside the supported desk-scale domain are reported
instead of silently accepted.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd as _gcd, isqrt
from typing import Iterable, Sequence

MAX_NATURAL = 2**64 - 1

ORACLE_BOUND_ENV = "INVARIANT_LAB_ORACLE_BOUND"
DEFAULT_ORACLE_BOUND = 10**6

TRIAL_DIVISION_LIMIT = 10**4

# Deterministic for every n < 3.3e24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NaturalRangeError(OverflowError):
    """A value fell outside [0, 2**64)."""


class OracleBoundError(ValueError):
    """An exhaustive computation was asked to run past its configured bound."""


def check_natural(value: int, name: str = "value") -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0 or value > MAX_NATURAL:
        raise NaturalRangeError(f"{name}={value} is outside the 64-bit natural range")
    return value


def check_modulus(m: int) -> int:
    check_natural(m, "m")
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return m


def oracle_bound() -> int:
    """Upper limit for brute-force scans, overridable through the environment."""
    raw = os.environ.get(ORACLE_BOUND_ENV)
    if raw is None:
        return DEFAULT_ORACLE_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_BOUND_ENV} must be an integer, got {raw!r}") from None
    if bound < 1:
        raise ValueError(f"{ORACLE_BOUND_ENV} must be positive")
    return bound


def require_within_oracle_bound(m: int, what: str) -> None:
    bound = oracle_bound()
    if m > bound:
        raise OracleBoundError(
            f"{what}: {m} exceeds the oracle bound {bound}; "
            f"use the factorization-based routines or raise {ORACLE_BOUND_ENV}"
        )


def gcd(x: int, y: int) -> int:
    check_natural(x, "x")
    check_natural(y, "y")
    return _gcd(x, y)


def lcm(*values: int) -> int:
    return reduce(lambda acc, v: acc // _gcd(acc, v) * v, values, 1)


def extended_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*x + v*y == g == gcd(x, y)``."""
    check_natural(x, "x")
    check_natural(y, "y")
    if x == 0 and y == 0:
        raise ValueError("extended_gcd(0, 0) has no Bezout certificate")
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


def mod_pow(base: int, exp: int, m: int) -> int:
    check_modulus(m)
    check_natural(base, "base")
    check_natural(exp, "exp")
    return pow(base, exp, m)


def crt_combine(congruences: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Solve a system of congruences with pairwise coprime moduli.

    Returns ``(x, M)`` where ``M`` is the product of the moduli and ``x`` is
    the unique solution in ``[0, M)``.  An empty system yields ``(0, 1)``.
    """
    pairs = [(check_natural(r, "remainder"), check_modulus(n)) for r, n in congruences]
    for i, (r, n) in enumerate(pairs):
        if r >= n:
            raise ValueError(f"remainder {r} is not reduced modulo {n}")
        for _, n2 in pairs[i + 1:]:
            if _gcd(n, n2) != 1:
                raise ValueError(f"moduli {n} and {n2} are not coprime")
    x, big = 0, 1
    for r, n in pairs:
        # x + big*t = r (mod n)
        _, inv, _ = extended_gcd(big % n, n) if n > 1 else (1, 0, 0)
        t = (r - x) * inv % n
        x += big * t
        big *= n
    check_natural(big, "product of moduli")
    return x % big, big


def _is_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin over the whole 64-bit range."""
    check_natural(n, "n")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    return all(_is_probable_prime(n, a) for a in _MR_BASES)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending ``(prime, exponent)`` pairs."""

    factors: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        out = 1
        for p, k in self.factors:
            out *= p**k
        return out

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def components(self) -> tuple[int, ...]:
        """The prime-power components ``p**k``, in prime order."""
        return tuple(p**k for p, k in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(k == 1 for _, k in self.factors)

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(str(p) if k == 1 else f"{p}^{k}" for p, k in self.factors)

    def as_list(self) -> list[list[int]]:
        return [[p, k] for p, k in self.factors]


def _pollard_brent(n: int) -> int:
    """Return a non-trivial factor of the odd composite ``n``."""
    for c in range(1, n):
        y, r, q = 2, 1, 1
        g = 1
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = _gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # Batch overshot; step back one at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = _gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=65536)
def _factorize(n: int) -> Factorization:
    found: dict[int, int] = {}
    rest = n
    for p in (2, 3):
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
    p = 5
    step = 2
    while p <= TRIAL_DIVISION_LIMIT and p * p <= rest:
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
        p += step
        step = 6 - step
    if rest > 1:
        if p * p > rest:
            found[rest] = found.get(rest, 0) + 1
        else:
            _split(rest, found)
    return Factorization(tuple(sorted(found.items())))


def factorize(n: int) -> Factorization:
    """Trial division to 10**4, then Pollard-Brent rho on the cofactor."""
    check_natural(n, "n")
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    return _factorize(n)


def euler_phi_from(f: Factorization) -> int:
    out = 1
    for p, k in f.factors:
        out *= (p - 1) * p ** (k - 1)
    return out


def product(values: Sequence[int]) -> int:
    out = 1
    for v in values:
        out *= v
    return out
