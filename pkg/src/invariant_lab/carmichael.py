"""The Omega exponent and Carmichael numbers.

``omega_paper(m)`` is the lcm of ``(p-1) * p**(k-1)`` over the prime powers of
``m``, taken literally including powers of two.  It differs from the Carmichael
function only when ``8 | m``.  For odd composite ``m`` the integrality of
``(m-1) / omega_paper(m)`` coincides with ``m`` being a Carmichael number.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator, Optional

from .arithmetic import (
    Factorization,
    OracleBoundError,
    check_natural,
    euler_phi_from,
    factorize,
    is_prime,
    lcm,
    oracle_bound,
)

FERMAT_EXHAUSTIVE_BOUND = 10**5
FERMAT_SAMPLE_SEED = 561
FERMAT_SAMPLE_SIZE = 64
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


@dataclass(frozen=True)
class OmegaReport:
    m: int
    omega_paper: int
    lambda_standard: int
    phi: int
    divides_phi: bool

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "omega_paper": self.omega_paper,
            "lambda_standard": self.lambda_standard,
            "phi": self.phi,
            "divides_phi": self.divides_phi,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OmegaReport":
        return cls(**data)


@dataclass(frozen=True)
class CarmichaelRecord:
    m: int
    factorization: Factorization
    omega: int
    ratio: Optional[int]  # (m-1)/omega when integral
    korselt: bool
    fermat_verified: bool

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "factorization": self.factorization.as_list(),
            "omega": self.omega,
            "ratio": self.ratio,
            "korselt": self.korselt,
            "fermat_verified": self.fermat_verified,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CarmichaelRecord":
        return cls(
            data["m"],
            Factorization(tuple((p, k) for p, k in data["factorization"])),
            data["omega"],
            data["ratio"],
            data["korselt"],
            data["fermat_verified"],
        )

    def csv_row(self) -> list:
        ratio = "" if self.ratio is None else self.ratio
        return [self.m, self.factorization.render(), self.omega, ratio,
                str(self.korselt).lower(), str(self.fermat_verified).lower()]


CSV_HEADER = ["m", "factorization", "omega", "ratio", "korselt", "fermat_verified"]


def _omega_from(f: Factorization) -> int:
    return lcm(*((p - 1) * p ** (k - 1) for p, k in f.factors))


def _lambda_from(f: Factorization) -> int:
    parts = []
    for p, k in f.factors:
        if p == 2 and k >= 3:
            parts.append(2 ** (k - 2))
        else:
            parts.append((p - 1) * p ** (k - 1))
    return lcm(*parts)


def omega_paper(m: int) -> int:
    check_natural(m, "m")
    if m < 2:
        raise ValueError("omega_paper requires m >= 2")
    return _omega_from(factorize(m))


def carmichael_lambda(m: int) -> int:
    check_natural(m, "m")
    if m < 1:
        raise ValueError("carmichael_lambda requires m >= 1")
    return _lambda_from(factorize(m))


def omega_report(m: int) -> OmegaReport:
    f = factorize(check_natural(m, "m"))
    if m < 2:
        raise ValueError("omega_report requires m >= 2")
    omega = _omega_from(f)
    phi = euler_phi_from(f)
    return OmegaReport(m, omega, _lambda_from(f), phi, phi % omega == 0)


def _korselt_from(m: int, f: Factorization) -> bool:
    if f.omega < 2 or not f.is_squarefree:
        return False
    return all((m - 1) % (p - 1) == 0 for p in f.primes)


def korselt_check(m: int) -> bool:
    """Composite, squarefree and ``(p-1) | (m-1)`` for every prime ``p | m``."""
    check_natural(m, "m")
    if m < 2:
        raise ValueError("korselt_check requires m >= 2")
    return _korselt_from(m, factorize(m))


def fermat_bases(m: int) -> Iterator[int]:
    """Bases used to check ``a**(m-1) == 1``: all of ``[1, m)`` up to the exhaustive
    bound, otherwise small primes plus a fixed pseudo-random sample."""
    if m <= FERMAT_EXHAUSTIVE_BOUND:
        yield from range(1, m)
        return
    yield from (p for p in _SMALL_PRIMES if p < m)
    rng = random.Random(FERMAT_SAMPLE_SEED)
    for _ in range(FERMAT_SAMPLE_SIZE):
        yield rng.randrange(2, m - 1)


def fermat_property(m: int) -> bool:
    """``a**(m-1) == 1 (mod m)`` for every base from :func:`fermat_bases` coprime to ``m``."""
    e = m - 1
    return all(pow(a, e, m) == 1 for a in fermat_bases(m) if gcd(a, m) == 1)


def _record(m: int, f: Factorization, fermat: bool) -> CarmichaelRecord:
    omega = _omega_from(f)
    ratio = (m - 1) // omega if (m - 1) % omega == 0 else None
    return CarmichaelRecord(m, f, omega, ratio, _korselt_from(m, f), fermat)


def hypothesis_check(m: int) -> CarmichaelRecord:
    """Compare the ``(m-1)/omega`` integrality test with Korselt and the Fermat property."""
    check_natural(m, "m")
    if m < 3 or m % 2 == 0:
        raise ValueError(f"hypothesis_check requires an odd composite, got {m}")
    if is_prime(m):
        raise ValueError(f"hypothesis_check requires a composite, got prime {m}")
    rec = _record(m, factorize(m), fermat_property(m))
    integral = rec.ratio is not None
    if m <= FERMAT_EXHAUSTIVE_BOUND and integral != rec.fermat_verified:
        raise ArithmeticError(
            f"ratio test ({integral}) and exhaustive Fermat check "
            f"({rec.fermat_verified}) disagree for {m}"
        )
    if integral and not rec.fermat_verified:
        raise ArithmeticError(f"integral ratio but a Fermat base fails for {m}")
    return rec


def _spf_sieve(n: int) -> list[int]:
    spf = list(range(n + 1))
    for p in range(2, int(n**0.5) + 1):
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
    return spf


def iter_carmichael(
    lo: int, hi: int, progress: Optional[Callable[[int], None]] = None
) -> Iterator[CarmichaelRecord]:
    """Yield Carmichael numbers in ``[lo, hi]`` in ascending order as they are found."""
    check_natural(lo, "lo")
    check_natural(hi, "hi")
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    bound = oracle_bound()
    if hi > bound:
        raise OracleBoundError(f"scan upper end {hi} exceeds the oracle bound {bound}")
    spf = _spf_sieve(hi)
    # Carmichael numbers are odd; the smallest is 561.
    start = max(lo, 3) | 1
    for m in range(start, hi + 1, 2):
        if progress is not None and m % 10000 == 1:
            progress(m)
        p = spf[m]
        if p == m:
            continue
        factors = []
        rest = m
        while rest > 1:
            p = spf[rest]
            rest //= p
            if rest % p == 0:
                break
            if (m - 1) % (p - 1):
                break
            factors.append((p, 1))
        else:
            f = Factorization(tuple(factors))
            yield _record(m, f, fermat_property(m))


def scan_carmichael(lo: int, hi: int) -> list[CarmichaelRecord]:
    return list(iter_carmichael(lo, hi))
