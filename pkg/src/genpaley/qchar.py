"""Fundamental discriminants, the quadratic character chi_delta, Gauss sums and L(2, chi)."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import zeta as hurwitz_zeta

from . import ntheory as nt
from .errors import DomainError, ParityError, UnsupportedRangeError, ValidationError

PRIMITIVITY_CAP = 10_000


class Parity(enum.Enum):
    EVEN = "even_character"
    ODD = "odd_character"


@dataclass(frozen=True)
class FundamentalDiscriminant:
    delta: int
    conductor: int
    squarefree_root: int
    parity: Parity

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    def __int__(self) -> int:
        return self.delta


def _make(delta: int, m: int) -> FundamentalDiscriminant:
    return FundamentalDiscriminant(delta, abs(delta), m, Parity.EVEN if delta > 0 else Parity.ODD)


def discriminant_from_squarefree(m: int) -> FundamentalDiscriminant:
    """Discriminant of Q(sqrt(m)): m if m = 1 mod 4, else 4m."""
    if m in (0, 1):
        raise DomainError(f"m must not be 0 or 1, got {m}")
    if not nt.is_squarefree(m):
        raise DomainError(f"m = {m} is not squarefree")
    return _make(m if m % 4 == 1 else 4 * m, m)


def validate_fundamental(delta: int) -> FundamentalDiscriminant:
    """Return the validated record for ``delta`` or raise naming the failed clause."""
    delta = int(delta)
    if delta in (0, 1):
        raise ValidationError(f"{delta} is not a fundamental discriminant: delta must not be 0 or 1")
    r = delta % 4
    if r == 1:
        if not nt.is_squarefree(delta):
            raise ValidationError(f"{delta} is not a fundamental discriminant: delta = 1 mod 4 but not squarefree")
        return _make(delta, delta)
    if r == 0:
        m = delta // 4
        if m % 4 not in (2, 3):
            raise ValidationError(
                f"{delta} is not a fundamental discriminant: delta = 4m needs m = 2,3 mod 4, got m = {m}"
            )
        if not nt.is_squarefree(m):
            raise ValidationError(f"{delta} is not a fundamental discriminant: delta = 4m with m = {m} not squarefree")
        return _make(delta, m)
    raise ValidationError(
        f"{delta} is not a fundamental discriminant: delta = {r} mod 4, neither squarefree m = 1 mod 4 nor 4m"
    )


def as_discriminant(disc: FundamentalDiscriminant | int) -> FundamentalDiscriminant:
    if isinstance(disc, FundamentalDiscriminant):
        return disc
    return validate_fundamental(disc)


def fundamental_discriminants(d_min: int, d_max: int, sign: int = 1) -> list[FundamentalDiscriminant]:
    """All fundamental discriminants with ``d_min <= |delta| <= d_max``, ordered by (D, delta).

    ``sign`` is +1, -1, or 0 for both signs. Enumeration sweeps squarefree m.
    """
    if d_max < max(d_min, 3):
        return []
    sf = nt.squarefree_sieve(d_max)
    out = []
    for k in np.flatnonzero(sf).tolist():
        for m in ((k,) if sign > 0 else (-k,) if sign < 0 else (k, -k)):
            if m == 1:
                continue
            delta = m if m % 4 == 1 else 4 * m
            if d_min <= abs(delta) <= d_max:
                out.append(_make(delta, m))
    out.sort(key=lambda d: (d.conductor, d.delta))
    return out


def _prime_discriminant_parts(disc: FundamentalDiscriminant) -> tuple[int, list[int]]:
    """Split delta as (2-part in {1, -4, 8, -8}) * prod(p*) over odd primes p | D."""
    odd = [p for p in nt.factorize(disc.conductor).primes if p != 2]
    odd_product = math.prod(p if p % 4 == 1 else -p for p in odd)
    return disc.delta // odd_product, odd


@lru_cache(maxsize=1024)
def _legendre_row(p: int) -> np.ndarray:
    row = -np.ones(p, dtype=np.int8)
    row[0] = 0
    x = np.arange(1, p, dtype=np.int64)
    row[(x * x) % p] = 1
    row.setflags(write=False)
    return row


_TWO_PART_ROWS = {
    1: np.array([1], dtype=np.int8),
    -4: np.array([0, 1, 0, -1], dtype=np.int8),
    8: np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int8),
    -8: np.array([0, 1, 0, 1, 0, -1, 0, -1], dtype=np.int8),
}


def character_table(disc: FundamentalDiscriminant) -> np.ndarray:
    """Values chi_delta(a) for a = 0..D-1 as an int8 array.

    Built as a product of local characters: (a/p) for each odd p | D (by
    reciprocity (p*/a) = (a/p) for a > 0) times chi_{-4}, chi_8 or chi_{-8}.
    """
    n = disc.conductor
    two, odd = _prime_discriminant_parts(disc)
    row = _TWO_PART_ROWS[two]
    table = np.tile(row, n // len(row))
    for p in odd:
        table *= np.tile(_legendre_row(p), n // p)
    return table


@dataclass(frozen=True, eq=False)
class QuadraticCharacter:
    discriminant: FundamentalDiscriminant
    values: np.ndarray = field(repr=False)

    @property
    def conductor(self) -> int:
        return self.discriminant.conductor

    def __call__(self, a: int) -> int:
        return int(self.values[a % self.conductor])


@lru_cache(maxsize=512)
def _cached_character(disc: FundamentalDiscriminant) -> QuadraticCharacter:
    values = character_table(disc)
    values.setflags(write=False)
    return QuadraticCharacter(disc, values)


def quadratic_character(disc: FundamentalDiscriminant | int) -> QuadraticCharacter:
    return _cached_character(as_discriminant(disc))


def chi(character: QuadraticCharacter, a: int) -> int:
    return character(a)


def is_primitive(character: QuadraticCharacter) -> bool:
    """Brute-force primitivity: chi separates some a = b (mod n) for every proper n | D."""
    n = character.conductor
    if n > PRIMITIVITY_CAP:
        raise UnsupportedRangeError(f"is_primitive is capped at D <= {PRIMITIVITY_CAP}, got {n}")
    units = np.flatnonzero(np.gcd(np.arange(n), n) == 1)
    vals = character.values[units].astype(np.int64)
    for d in nt.divisors(n)[:-1]:
        keys = units % d
        lo = np.full(d, 2, dtype=np.int64)
        hi = np.full(d, -2, dtype=np.int64)
        np.minimum.at(lo, keys, vals)
        np.maximum.at(hi, keys, vals)
        if not np.any(lo < hi):
            return False
    return True


def sqrt_delta(disc: FundamentalDiscriminant) -> complex:
    """Principal square root: i*sqrt(D) when delta < 0."""
    r = math.sqrt(disc.conductor)
    return complex(r, 0.0) if disc.delta > 0 else complex(0.0, r)


def gauss_sum(character: QuadraticCharacter, b: int) -> complex:
    """G(b, chi) = sum_a chi(a) zeta_D^(ab), evaluated numerically."""
    n = character.conductor
    a = np.arange(n, dtype=np.int64)
    phases = np.exp(2j * np.pi * ((a * (b % n)) % n) / n)
    return complex(np.dot(character.values.astype(np.float64), phases))


def _require_even(character: QuadraticCharacter) -> None:
    if character.discriminant.delta < 0:
        raise ParityError(f"needs an even character (delta > 0), got delta = {character.discriminant.delta}")


def weighted_half_sum(character: QuadraticCharacter) -> int:
    """sum_{a=1}^{D//2} chi(a) * a, exactly."""
    _require_even(character)
    half = character.conductor // 2
    a = np.arange(half + 1, dtype=np.int64)
    return int(np.dot(character.values[: half + 1].astype(np.int64), a))


def l_two_exact(character: QuadraticCharacter) -> float:
    """L(2, chi) recovered from the weighted half sum (Berndt's identity)."""
    _require_even(character)
    n = character.conductor
    w = weighted_half_sum(character)
    return -(math.pi**2) * w / (n * math.sqrt(n) * (1 - character(2) / 4))


def l_two_series(character: QuadraticCharacter, tolerance: float = 1e-8) -> float:
    """Truncated Dirichlet series sum_{n <= N} chi(n)/n^2.

    Partial sums of chi are bounded by D, so the tail is at most 2D/N^2;
    N is chosen to push that below ``tolerance``.
    """
    _require_even(character)
    if tolerance < 1e-12:
        raise DomainError(f"tolerance must be >= 1e-12, got {tolerance}")
    n = character.conductor
    big_n = math.ceil(math.sqrt(2 * n / tolerance))
    total = 0.0
    chunk = 1 << 20
    for start in range(1, big_n + 1, chunk):
        k = np.arange(start, min(start + chunk, big_n + 1), dtype=np.int64)
        vals = character.values[k % n].astype(np.float64)
        kf = k.astype(np.float64)
        total += float(np.sum(vals / (kf * kf)))
    return total


def l_two_hurwitz(character: QuadraticCharacter) -> float:
    """L(2, chi) = D^-2 sum_a chi(a) zeta(2, a/D), independent of the half sums."""
    n = character.conductor
    a = np.flatnonzero(character.values)
    terms = character.values[a].astype(np.float64) * hurwitz_zeta(2.0, a / n)
    return float(math.fsum(terms)) / n**2
