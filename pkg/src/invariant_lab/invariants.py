"""Invariants (idempotents) and anti-invariants modulo m.

An invariant is a residue ``I`` with ``I*I = I (mod m)``; an anti-invariant
is a residue ``A`` with ``A*A = -A (mod m)``.  The two sets are exchanged by
``x -> (m - x) % m`` and every anti-invariant is immediately followed by an
invariant.  Residues are canonical integers in ``[0, m)``; the "paper style"
helpers only change how ``0`` is displayed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from math import gcd
from typing import Optional

from .arithmetic import (
    check_modulus,
    check_natural,
    crt_combine,
    factorize,
    require_within_oracle_bound,
)


@dataclass(frozen=True)
class InvariantReport:
    """Full idempotent census of a modulus."""

    modulus: int
    invariants: tuple[int, ...]
    anti_invariants: tuple[int, ...]
    tuples: tuple[tuple[int, int], ...]

    @property
    def trivial(self) -> tuple[int, ...]:
        return tuple(i for i in self.invariants if i in (0, 1))

    @property
    def nontrivial(self) -> tuple[int, ...]:
        return tuple(i for i in self.invariants if i not in (0, 1))

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "invariants": list(self.invariants),
            "anti_invariants": list(self.anti_invariants),
            "tuples": [list(t) for t in self.tuples],
            "trivial": list(self.trivial),
            "nontrivial": list(self.nontrivial),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantReport":
        return cls(
            modulus=data["modulus"],
            invariants=tuple(data["invariants"]),
            anti_invariants=tuple(data["anti_invariants"]),
            tuples=tuple((a, i) for a, i in data["tuples"]),
        )


@dataclass(frozen=True)
class CompositeCertificate:
    """A non-trivial invariant and the coprime split ``m = factor_a * factor_b`` it reveals.

    ``witness`` is ``0 mod factor_a`` and ``1 mod factor_b``.
    """

    modulus: int
    witness: int
    factor_a: int
    factor_b: int

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "witness": self.witness,
            "factor_a": self.factor_a,
            "factor_b": self.factor_b,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CompositeCertificate":
        return cls(data["modulus"], data["witness"], data["factor_a"], data["factor_b"])


def _check_residue(x: int, m: int) -> None:
    check_modulus(m)
    check_natural(x, "x")
    if x >= m:
        raise ValueError(f"{x} is not a canonical residue modulo {m}")


def is_invariant(x: int, m: int) -> bool:
    _check_residue(x, m)
    return x * x % m == x


def is_anti_invariant(x: int, m: int) -> bool:
    _check_residue(x, m)
    return x * x % m == (m - x) % m


def anti_of(i: int, m: int) -> int:
    """Partner anti-invariant of the invariant ``i``; the map is an involution."""
    if not is_invariant(i, m):
        raise ValueError(f"{i} is not an invariant modulo {m}")
    return (m - i) % m


def invariant_of(a: int, m: int) -> int:
    """Inverse direction of :func:`anti_of`."""
    if not is_anti_invariant(a, m):
        raise ValueError(f"{a} is not an anti-invariant modulo {m}")
    return (m - a) % m


def _pair_tuples(anti: tuple[int, ...], m: int) -> tuple[tuple[int, int], ...]:
    return tuple((a, (a + 1) % m) for a in anti)


def enumerate_invariants_bruteforce(m: int) -> InvariantReport:
    """Scan every residue and test both defining congruences directly."""
    check_modulus(m)
    require_within_oracle_bound(m, "brute-force enumeration")
    invariants = []
    anti = []
    for x in range(m):
        sq = x * x % m
        if sq == x:
            invariants.append(x)
        if sq == (m - x) % m:
            anti.append(x)
    anti_t = tuple(anti)
    return InvariantReport(m, tuple(invariants), anti_t, _pair_tuples(anti_t, m))


def invariants_from_factorization(m: int) -> InvariantReport:
    """Build all ``2**omega(m)`` invariants by CRT over the prime-power components.

    Each invariant is ``0`` on a subset of the components and ``1`` on the rest.
    """
    check_modulus(m)
    components = factorize(m).components
    found = set()
    for choice in _cartesian((0, 1), repeat=len(components)):
        value, _ = crt_combine(zip(choice, components))
        found.add(value % m)
    invariants = tuple(sorted(found))
    anti = tuple(sorted((m - i) % m for i in invariants))
    return InvariantReport(m, invariants, anti, _pair_tuples(anti, m))


def tuples_of(m: int) -> tuple[tuple[int, int], ...]:
    """``(anti-invariant, invariant)`` consecutive pairs, ascending by anti-invariant."""
    return invariants_from_factorization(m).tuples


def power_stability_check(i: int, m: int, s_max: int) -> bool:
    if not is_invariant(i, m):
        raise ValueError(f"{i} is not an invariant modulo {m}")
    if s_max < 1:
        raise ValueError("s_max must be >= 1")
    x = i
    for _ in range(s_max):
        if x != i:
            return False
        x = x * i % m
    return True


def certify_composite_from_invariant(witness: int, m: int) -> CompositeCertificate:
    if not is_invariant(witness, m):
        raise ValueError(f"{witness} is not an invariant modulo {m}")
    if witness in (0, 1):
        raise ValueError("trivial invariant carries no information about m")
    factor_a = gcd(witness, m)
    factor_b = m // factor_a
    # Second route: the complementary factor must also come out of witness - 1.
    if gcd(witness - 1, m) != factor_b:
        raise ArithmeticError(
            f"certificate mismatch for witness {witness} mod {m}: "
            f"gcd(w-1, m)={gcd(witness - 1, m)} != {factor_b}"
        )
    return CompositeCertificate(m, witness, factor_a, factor_b)


def primality_by_invariants(m: int) -> Optional[CompositeCertificate]:
    """Look for the smallest non-trivial invariant by exhaustive search.

    Returns a certificate when ``m`` has at least two distinct prime factors,
    and ``None`` when ``m`` is a prime or a prime power: the criterion cannot
    tell those two apart.
    """
    check_modulus(m)
    if m < 2:
        raise ValueError("primality_by_invariants requires m >= 2")
    require_within_oracle_bound(m, "invariant primality search")
    for x in range(2, m - 1):
        if x * x % m == x:
            return certify_composite_from_invariant(x, m)
    return None


def paper_value(i: int, m: int) -> int:
    """Render an invariant with the ``0 -> m`` display convention."""
    return m if i == 0 else i


def paper_view(report: InvariantReport) -> dict:
    """Invariants, anti-invariants and tuples as written in the paper's tables.

    Invariants run ``1 .. m``, anti-invariants are listed in the order of their
    partner invariants, and ``(m-1, 0)`` becomes ``(m-1, m)``.
    """
    m = report.modulus
    invs = sorted(paper_value(i, m) for i in report.invariants)
    return {
        "invariants": invs,
        "anti_invariants": [m - i for i in invs],
        "tuples": [[a, paper_value(i, m)] for a, i in report.tuples],
    }
