"""Closed-form spectrum of P_delta in Q(sqrt(delta)), and a direct DFT oracle."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import ntheory as nt
from .errors import ContractError, ParityError
from .paley import PaleyGraph
from .qchar import FundamentalDiscriminant, as_discriminant


def fraction_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def quadratic_sign(a: Fraction, b: Fraction, n: int) -> int:
    """Exact sign of a + b*sqrt(n) for n >= 0."""
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or n == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: compare a^2 with b^2 n
    diff = a * a - b * b * n
    return sa * ((diff > 0) - (diff < 0))


@dataclass(frozen=True)
class AlgebraicEigenvalue:
    """The number rational_part + radical_coeff * sqrt(radicand)."""

    rational_part: Fraction
    radical_coeff: Fraction
    radicand: int

    def __post_init__(self):
        object.__setattr__(self, "rational_part", Fraction(self.rational_part))
        object.__setattr__(self, "radical_coeff", Fraction(self.radical_coeff))

    @classmethod
    def rational(cls, value, radicand: int) -> AlgebraicEigenvalue:
        return cls(Fraction(value), Fraction(0), radicand)

    @property
    def is_rational(self) -> bool:
        return self.radical_coeff == 0

    def numeric(self) -> complex:
        return complex(self.rational_part) + float(self.radical_coeff) * cmath.sqrt(self.radicand)

    def __float__(self) -> float:
        self._require_real()
        return self.numeric().real

    def _require_real(self) -> None:
        if self.radicand < 0 and self.radical_coeff != 0:
            raise ContractError(f"{self} is not real")

    def _same_field(self, other: AlgebraicEigenvalue) -> None:
        if self.radicand != other.radicand:
            raise ContractError(f"radicands differ: {self.radicand} vs {other.radicand}")

    def sign(self) -> int:
        self._require_real()
        return quadratic_sign(self.rational_part, self.radical_coeff, self.radicand)

    def __neg__(self) -> AlgebraicEigenvalue:
        return AlgebraicEigenvalue(-self.rational_part, -self.radical_coeff, self.radicand)

    def __abs__(self) -> AlgebraicEigenvalue:
        return -self if self.sign() < 0 else self

    def __add__(self, other: AlgebraicEigenvalue) -> AlgebraicEigenvalue:
        self._same_field(other)
        return AlgebraicEigenvalue(
            self.rational_part + other.rational_part, self.radical_coeff + other.radical_coeff, self.radicand
        )

    def __sub__(self, other: AlgebraicEigenvalue) -> AlgebraicEigenvalue:
        return self + (-other)

    def __mul__(self, other: AlgebraicEigenvalue | int | Fraction) -> AlgebraicEigenvalue:
        if not isinstance(other, AlgebraicEigenvalue):
            k = Fraction(other)
            return AlgebraicEigenvalue(self.rational_part * k, self.radical_coeff * k, self.radicand)
        self._same_field(other)
        a, b, c, d = self.rational_part, self.radical_coeff, other.rational_part, other.radical_coeff
        return AlgebraicEigenvalue(a * c + b * d * self.radicand, a * d + b * c, self.radicand)

    __rmul__ = __mul__

    def compare(self, other: AlgebraicEigenvalue) -> int:
        """-1, 0, 1 as self <, ==, > other (real values only)."""
        return (self - other).sign()

    def __str__(self) -> str:
        a, b = self.rational_part, self.radical_coeff
        if b == 0:
            return str(a)
        op = "-" if b < 0 else "+"
        return f"{a} {op} {abs(b)}*sqrt({self.radicand})"

    def to_json(self) -> dict:
        return {
            "rational": fraction_str(self.rational_part),
            "radical_coeff": fraction_str(self.radical_coeff),
            "radicand": self.radicand,
        }


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: AlgebraicEigenvalue
    multiplicity: int
    origin: str


@dataclass(frozen=True)
class SpectrumMultiset:
    """Eigenvalues keyed by origin (a proper divisor d, or the +-sqrt(delta) pair)."""

    entries: tuple[SpectrumEntry, ...]
    radicand: int

    @property
    def size(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def canonicalize(self) -> dict[AlgebraicEigenvalue, int]:
        merged: dict[AlgebraicEigenvalue, int] = {}
        for e in self.entries:
            merged[e.eigenvalue] = merged.get(e.eigenvalue, 0) + e.multiplicity
        return merged

    def multiplicity(self, value: AlgebraicEigenvalue | int | Fraction) -> int:
        if not isinstance(value, AlgebraicEigenvalue):
            value = AlgebraicEigenvalue.rational(value, self.radicand)
        return self.canonicalize().get(value, 0)

    def power_sum(self, k: int) -> AlgebraicEigenvalue:
        """Exact sum of lambda**k over the multiset."""
        total = AlgebraicEigenvalue.rational(0, self.radicand)
        for e in self.entries:
            term = AlgebraicEigenvalue.rational(1, self.radicand)
            for _ in range(k):
                term = term * e.eigenvalue
            total = total + term * e.multiplicity
        return total

    def trace(self) -> AlgebraicEigenvalue:
        return self.power_sum(1)

    def expand_numeric(self) -> np.ndarray:
        return np.array([e.eigenvalue.numeric() for e in self.entries for _ in range(e.multiplicity)])

    def to_json(self) -> list[dict]:
        rows = sorted(self.canonicalize().items(), key=lambda kv: (kv[0].numeric().real, kv[0].numeric().imag))
        return [{**v.to_json(), "multiplicity": m} for v, m in rows]


def closed_form_spectrum(disc: FundamentalDiscriminant | int) -> SpectrumMultiset:
    disc = as_discriminant(disc)
    n, delta = disc.conductor, disc.delta
    phi_n = nt.euler_phi(n)
    entries = []
    for d in nt.divisors(n)[:-1]:
        phi_d = nt.euler_phi(d)
        value = Fraction(phi_n, 2 * phi_d) * nt.mobius(d)
        entries.append(SpectrumEntry(AlgebraicEigenvalue.rational(value, delta), phi_d, f"d={d}"))
    mu_half = Fraction(nt.mobius(n), 2)
    for sgn, label in ((1, "+sqrt"), (-1, "-sqrt")):
        ev = AlgebraicEigenvalue(mu_half, Fraction(sgn, 2), delta)
        entries.append(SpectrumEntry(ev, phi_n // 2, label))
    return SpectrumMultiset(tuple(entries), delta)


def dft_spectrum(g: PaleyGraph) -> np.ndarray:
    """lambda_j = sum_a generator[a] exp(2 pi i a j / D), by direct O(D^2) summation."""
    n = g.order
    j = np.arange(n, dtype=np.int64)
    offs = g.offsets.astype(np.int64)
    phases = (j[:, None] * offs[None, :]) % n
    return np.exp(2j * np.pi * phases / n).sum(axis=1)


def spectra_match(exact: SpectrumMultiset, numeric, tolerance: float = 1e-9) -> bool:
    """Greedy nearest-neighbour pairing of the two multisets, every pair within ``tolerance``."""
    numeric = np.asarray(numeric, dtype=complex)
    if exact.size != numeric.size:
        raise ContractError(f"multiset sizes differ: {exact.size} exact vs {numeric.size} numeric")
    pool = numeric.copy()
    targets = exact.expand_numeric()
    for z in sorted(targets, key=lambda c: (c.real, c.imag)):
        dist = np.abs(pool - z)
        k = int(np.argmin(dist))
        if not dist[k] <= tolerance:
            return False
        pool[k] = np.inf
    return True


def lambda_g(disc: FundamentalDiscriminant | int) -> AlgebraicEigenvalue:
    """Largest |eigenvalue| strictly below the degree r = phi(D)/2, compared exactly."""
    disc = as_discriminant(disc)
    if disc.delta < 0:
        raise ParityError(f"lambda_g needs delta > 0, got {disc.delta}")
    r = AlgebraicEigenvalue.rational(Fraction(nt.euler_phi(disc.conductor), 2), disc.delta)
    best = None
    for e in closed_form_spectrum(disc).entries:
        mag = abs(e.eigenvalue)
        if mag.compare(r) == 0:
            continue
        if best is None or mag.compare(best) > 0:
            best = mag
    return best
