"""Ramanujan property of P_delta: spectral test, the seven-case classification, and the composite-D lemma."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from . import ntheory as nt
from .errors import DomainError, ParityError
from .qchar import FundamentalDiscriminant, as_discriminant
from .spectral import AlgebraicEigenvalue, fraction_str, lambda_g, quadratic_sign


class RamanujanCase(enum.Enum):
    D8 = "D8"
    FOUR_P = "FourP"
    EIGHT_P = "EightP"
    FOUR_P1P2 = "FourP1P2"
    EIGHT_P1P2 = "EightP1P2"
    PRIME_P = "PrimeP"
    P1P2 = "P1P2"
    NOT_RAMANUJAN = "NotRamanujan"


@dataclass(frozen=True)
class LambdaBound:
    """lambda(G)^2 = rational + radical * sqrt(radicand), against 4(r - 1)."""

    lambda_sq: AlgebraicEigenvalue
    four_r_minus_4: int

    @property
    def holds(self) -> bool:
        return (self.lambda_sq - AlgebraicEigenvalue.rational(self.four_r_minus_4, self.lambda_sq.radicand)).sign() <= 0

    def lambda_sq_str(self) -> str:
        a, b = self.lambda_sq.rational_part, self.lambda_sq.radical_coeff
        op = "-" if b < 0 else "+"
        return f"{fraction_str(a)} {op} ({fraction_str(abs(b))})√{self.lambda_sq.radicand}"


@dataclass(frozen=True)
class RamanujanVerdict:
    delta: int
    conductor: int
    is_ramanujan: bool
    classification_case: RamanujanCase
    spectral_witness: AlgebraicEigenvalue
    bound: LambdaBound

    @property
    def consistent(self) -> bool:
        return self.is_ramanujan == self.bound.holds

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "D": self.conductor,
            "case": self.classification_case.value,
            "is_ramanujan": self.is_ramanujan,
            "lambda_sq": self.bound.lambda_sq_str(),
            "bound_4r_minus_4": self.bound.four_r_minus_4,
        }


def _positive(disc: FundamentalDiscriminant | int) -> FundamentalDiscriminant:
    disc = as_discriminant(disc)
    if disc.delta <= 0:
        raise ParityError(f"Ramanujan questions need delta > 0, got {disc.delta}")
    return disc


def spectral_bound(disc: FundamentalDiscriminant | int) -> tuple[AlgebraicEigenvalue, LambdaBound]:
    disc = _positive(disc)
    r = nt.euler_phi(disc.conductor) // 2
    if r < 2:
        raise DomainError(f"degree {r} < 2 leaves 2*sqrt(r-1) degenerate")
    lam = lambda_g(disc)
    return lam, LambdaBound(lam * lam, 4 * (r - 1))


def is_ramanujan_spectral(disc: FundamentalDiscriminant | int) -> tuple[bool, AlgebraicEigenvalue]:
    """Exact test lambda(G) <= 2 sqrt(r - 1), done as lambda(G)^2 <= 4(r - 1)."""
    lam, bound = spectral_bound(disc)
    return bound.holds, lam


def classification_case(disc: FundamentalDiscriminant | int) -> RamanujanCase:
    disc = _positive(disc)
    n = disc.conductor
    fac = nt.factorize(n)
    two = dict(fac.factors).get(2, 0)
    odd = [p for p in fac.primes if p != 2]
    if n == 8:
        return RamanujanCase.D8
    if two == 2 and len(odd) == 1 and odd[0] % 4 == 3:
        return RamanujanCase.FOUR_P
    if two == 3 and len(odd) == 1:
        return RamanujanCase.EIGHT_P
    if two == 2 and len(odd) == 2:
        p1, p2 = odd
        if (p1 * p2) % 4 == 3 and p2 <= 4 * p1 - 5:
            return RamanujanCase.FOUR_P1P2
    if two == 3 and len(odd) == 2:
        p1, p2 = odd
        if p2 <= 2 * p1 - 3:
            return RamanujanCase.EIGHT_P1P2
    if two == 0 and len(odd) == 1 and odd[0] % 4 == 1:
        return RamanujanCase.PRIME_P
    if two == 0 and len(odd) == 2:
        p1, p2 = odd
        if (p1 * p2) % 4 == 1 and p2 <= 8 * p1 - 9:
            return RamanujanCase.P1P2
    return RamanujanCase.NOT_RAMANUJAN


def classify_ramanujan(disc: FundamentalDiscriminant | int) -> RamanujanVerdict:
    disc = _positive(disc)
    case = classification_case(disc)
    lam, bound = spectral_bound(disc)
    return RamanujanVerdict(
        disc.delta, disc.conductor, case is not RamanujanCase.NOT_RAMANUJAN, case, lam, bound
    )


def lemma_inequalities(disc: FundamentalDiscriminant | int) -> bool:
    """The two inequalities characterising Ramanujan P_delta for composite D.

    With no odd prime divisor (D = 8) the first inequality has nothing to
    constrain and counts as satisfied.
    """
    disc = _positive(disc)
    n = disc.conductor
    if nt.is_prime(n):
        raise DomainError(f"the lemma assumes composite D, got prime {n}")
    phi = nt.euler_phi(n)
    odd = [p for p in nt.factorize(n).primes if p != 2]
    first = True
    if odd:
        p = odd[0]
        first = Fraction(phi, (p - 1) ** 2) + Fraction(16, phi) <= 8
    if n % 2:
        # phi/D - 1/8 - 17/(8D) >= sqrt(D) / (4D)
        lhs = Fraction(phi, n) - Fraction(1, 8) - Fraction(17, 8 * n)
        second = quadratic_sign(lhs, Fraction(-1, 4 * n), n) >= 0
    else:
        second = Fraction(phi, n) >= Fraction(1, 8) + Fraction(2, n)
    return first and second
