"""Generalized Euler theorem and the multiplicative structure of divisor multiples.

``a ** phi(m) mod m`` is always an invariant of ``m``: it is ``1`` on the
prime-power components coprime to ``a`` and ``0`` on the ones sharing a prime
with ``a``.  For a unitary divisor ``a`` of ``m`` the reduced multiples of
``a`` form a group whose identity is an invariant and whose ``-1`` is the
matching anti-invariant.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from math import gcd

from .arithmetic import (
    check_modulus,
    check_natural,
    crt_combine,
    euler_phi_from,
    factorize,
    require_within_oracle_bound,
)


@dataclass(frozen=True)
class EulerClass:
    support: int
    idempotent: int
    size: int  # residues in [0, m) whose shared primes with m are exactly those of support


@dataclass(frozen=True)
class EulerClassification:
    modulus: int
    phi: int
    classes: tuple[EulerClass, ...]

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "phi": self.phi,
            "classes": [
                {"support": c.support, "idempotent": c.idempotent, "size": c.size}
                for c in self.classes
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EulerClassification":
        return cls(
            data["modulus"],
            data["phi"],
            tuple(EulerClass(c["support"], c["idempotent"], c["size"]) for c in data["classes"]),
        )


@dataclass(frozen=True)
class SubgroupTable:
    """Multiplication table of the reduced multiples of a unitary divisor."""

    modulus: int
    generator_divisor: int
    elements: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    anti_identity: int
    inverses: tuple[tuple[int, int], ...]

    def inverse(self, x: int) -> int:
        return dict(self.inverses)[x]

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "generator_divisor": self.generator_divisor,
            "elements": list(self.elements),
            "table": [list(row) for row in self.table],
            "identity": self.identity,
            "anti_identity": self.anti_identity,
            "inverses": [list(p) for p in self.inverses],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SubgroupTable":
        return cls(
            data["modulus"],
            data["generator_divisor"],
            tuple(data["elements"]),
            tuple(tuple(row) for row in data["table"]),
            data["identity"],
            data["anti_identity"],
            tuple((x, y) for x, y in data["inverses"]),
        )


def euler_phi(m: int) -> int:
    check_modulus(m)
    return euler_phi_from(factorize(m))


def generalized_euler_residue(a: int, m: int) -> int:
    """``a ** phi(m) mod m``; always an invariant of ``m``."""
    check_modulus(m)
    check_natural(a, "a")
    if a >= m:
        raise ValueError(f"{a} is not a canonical residue modulo {m}")
    r = pow(a, euler_phi(m), m)
    if r * r % m != r:
        raise ArithmeticError(f"{a}^phi({m}) = {r} is not an invariant")
    return r


def _support_idempotent(a: int, m: int) -> tuple[int, int]:
    f = factorize(m)
    phi = euler_phi_from(f)
    support = 1
    congruences = []
    for p, k in f.factors:
        q = p**k
        if a % p == 0:
            # The component only vanishes once the exponent reaches k.
            if phi < k:
                raise ArithmeticError(f"phi({m}) = {phi} < {k} for component {q}")
            support *= q
            congruences.append((0, q))
        else:
            congruences.append((1 % q, q))
    value, _ = crt_combine(congruences)
    return support, value % m


def expected_idempotent(a: int, m: int) -> int:
    """Predict ``a ** phi(m) mod m`` from the primes ``a`` shares with ``m``, without exponentiating."""
    check_modulus(m)
    check_natural(a, "a")
    return _support_idempotent(a % m, m)[1]


def support_of(a: int, m: int) -> int:
    """Product of the full prime-power components of ``m`` whose prime divides ``a``."""
    check_modulus(m)
    return _support_idempotent(a % m, m)[0]


def verify_generalization(m: int) -> bool:
    """Exhaustively compare exponentiation with the CRT prediction over ``[0, m)``.

    ``a = 0`` is included; it lands on the invariant ``0``.
    """
    check_modulus(m)
    require_within_oracle_bound(m, "generalized Euler verification")
    f = factorize(m)
    phi = euler_phi_from(f)
    # One idempotent per set of shared primes; key each residue by that set.
    predicted = {}
    for p_choice in _cartesian((False, True), repeat=f.omega):
        congr = [((0 if hit else 1) % (p**k), p**k) for hit, (p, k) in zip(p_choice, f.factors)]
        predicted[p_choice] = crt_combine(congr)[0] % m
    primes = f.primes
    for a in range(m):
        got = pow(a, phi, m)
        key = tuple(a % p == 0 for p in primes)
        if got != predicted[key] or got * got % m != got:
            return False
    return True


def euler_classification(m: int) -> EulerClassification:
    """One row per unitary divisor: the invariant every residue of that class is sent to."""
    check_modulus(m)
    f = factorize(m)
    rows = []
    for choice in _cartesian((False, True), repeat=f.omega):
        support = 1
        size = 1
        congr = []
        for hit, (p, k) in zip(choice, f.factors):
            q = p**k
            if hit:
                support *= q
                size *= p ** (k - 1)
                congr.append((0, q))
            else:
                size *= (p - 1) * p ** (k - 1)
                congr.append((1 % q, q))
        rows.append(EulerClass(support, crt_combine(congr)[0] % m, size))
    rows.sort(key=lambda c: c.support)
    return EulerClassification(m, euler_phi_from(f), tuple(rows))


def _check_unitary_divisor(a: int, m: int) -> int:
    check_modulus(m)
    check_natural(a, "a")
    if a == 0 or m % a:
        raise ValueError(f"{a} does not divide {m}")
    b = m // a
    if gcd(a, b) != 1:
        raise ValueError(f"{a} and {b} are not coprime, so {a} is not a unitary divisor of {m}")
    return b


def multiplier_exponent_check(a: int, m: int, s: int) -> bool:
    """Check ``a ** (s*phi(m) + 1) == a (mod m)`` for a unitary divisor ``a``."""
    _check_unitary_divisor(a, m)
    if s < 1:
        raise ValueError("s must be >= 1")
    return pow(a, s * euler_phi(m) + 1, m) == a % m


def subgroup_table(m: int, a: int) -> SubgroupTable:
    b = _check_unitary_divisor(a, m)
    if not 1 < a < m:
        raise ValueError("subgroup_table requires 1 < a < m")
    elements = tuple(a * k for k in range(1, b) if gcd(k, b) == 1)
    member = set(elements)
    table = tuple(tuple(x * y % m for y in elements) for x in elements)
    for row in table:
        if not member.issuperset(row):
            raise ArithmeticError(f"multiples of {a} mod {m} are not closed")
    identity = crt_combine([(0, a), (1, b)])[0]
    anti_identity = (m - identity) % m
    index = {x: n for n, x in enumerate(elements)}
    inverses = []
    for x, row in zip(elements, table):
        hits = [elements[j] for j, v in enumerate(row) if v == identity]
        if len(hits) != 1:
            raise ArithmeticError(f"{x} has {len(hits)} inverses modulo {m}")
        inverses.append((x, hits[0]))
    if identity not in index or table[index[identity]] != elements:
        raise ArithmeticError(f"{identity} does not act as identity")
    return SubgroupTable(m, a, elements, table, identity, anti_identity, tuple(inverses))


def powers_of(a: int, m: int) -> tuple[int, ...]:
    """Distinct values of ``a, a**2, a**3, ...`` mod ``m`` up to the first repeat of ``a``."""
    check_modulus(m)
    seen = []
    x = a % m
    while True:
        seen.append(x)
        x = x * a % m
        if x == a % m or x in seen:
            return tuple(seen)
