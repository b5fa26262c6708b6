"""Exact integer kernel: factorization, multiplicative functions, symbols and sums.

Everything here is pure integer arithmetic. Inputs are limited to
``|n| <= 2**63`` so deterministic trial division is enough.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod

import numpy as np

from .errors import DomainError

MAX_INPUT = 2**63


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return self.sign * prod(p**e for p, e in self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


@lru_cache(maxsize=1 << 16)
def _factor_positive(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        out.append((2, e))
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _check_range(n: int) -> None:
    if abs(n) > MAX_INPUT:
        raise DomainError(f"|{n}| exceeds the supported range 2**63")


def factorize(n: int) -> Factorization:
    """Factor a nonzero integer as ``sign * prod(p**e)`` with increasing primes."""
    if n == 0:
        raise DomainError("cannot factorize 0")
    _check_range(n)
    return Factorization(1 if n > 0 else -1, _factor_positive(abs(n)))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return _factor_positive(n) == ((n, 1),)


def is_squarefree(n: int) -> bool:
    if n == 0:
        raise DomainError("is_squarefree(0) is undefined")
    return all(e == 1 for _, e in factorize(n).factors)


def divisors(n: int) -> list[int]:
    """Positive divisors of ``|n|`` in increasing order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    if n < 1:
        raise DomainError(f"mobius needs n >= 1, got {n}")
    factors = _factor_positive(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def euler_phi(n: int) -> int:
    if n < 1:
        raise DomainError(f"euler_phi needs n >= 1, got {n}")
    result = 1
    for p, e in _factor_positive(n):
        result *= (p - 1) * p ** (e - 1)
    return result


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise DomainError(f"legendre_symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def _kronecker_two(a: int) -> int:
    if a % 2 == 0:
        return 0
    return 1 if a % 8 in (1, 7) else -1


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for every pair of integers.

    Multiplicative over the factorization of ``n``: a sign factor (a/-1),
    the (a/2) branch on ``a mod 8`` and Legendre symbols at odd primes.
    ``(a/0)`` is 1 for ``a = +-1`` and 0 otherwise.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    _check_range(n)
    result = -1 if (n < 0 and a < 0) else 1
    for p, e in _factor_positive(abs(n)):
        if p == 2:
            s = _kronecker_two(a)
        else:
            r = pow(a % p, (p - 1) // 2, p)
            s = 0 if r == 0 else (1 if r == 1 else -1)
        if s == 0:
            return 0
        if s == -1 and e % 2:
            result = -result
    return result


def ramanujan_sum(n: int, m: int) -> int:
    """c_n(m) = mu(N) phi(n) / phi(N) with N = n / gcd(n, m)."""
    if n < 1 or m < 1:
        raise DomainError(f"ramanujan_sum needs n, m >= 1, got ({n}, {m})")
    big_n = n // gcd(n, m)
    return mobius(big_n) * euler_phi(n) // euler_phi(big_n)


def ramanujan_sum_direct(n: int, m: int) -> complex:
    """The defining exponential sum, evaluated in floating point."""
    a = np.arange(1, n + 1)
    a = a[np.gcd(a, n) == 1]
    return complex(np.exp(2j * np.pi * ((m * a) % n) / n).sum())


def _psi(n: int) -> int:
    return prod(1 - p for p, _ in _factor_positive(n))


def baum_half_sum(n: int) -> Fraction:
    """Closed form (n phi(n) - eps psi(n)) / 8 for the coprime half sum.

    eps is 1 for odd n, 0 when 4 | n, and 2 when n = 2 mod 4.
    """
    eps = 1 if n % 2 else (0 if n % 4 == 0 else 2)
    return Fraction(n * euler_phi(n) - eps * _psi(n), 8)


def coprime_half_sum(n: int) -> int:
    """Sum of the integers ``1 <= a <= n // 2`` coprime to ``n``.

    Summed directly; the result is checked against the closed form above.
    """
    if n < 3:
        raise DomainError(f"coprime_half_sum needs n >= 3, got {n}")
    a = np.arange(1, n // 2 + 1, dtype=np.int64)
    total = int(a[np.gcd(a, n) == 1].sum())
    expected = baum_half_sum(n)
    if total != expected:
        raise ArithmeticError(f"coprime half sum {total} != closed form {expected} for n={n}")
    return total


def squarefree_sieve(limit: int) -> np.ndarray:
    """Boolean array ``s`` with ``s[k]`` true iff k is squarefree (k >= 1)."""
    s = np.ones(limit + 1, dtype=bool)
    s[0] = False
    for p in range(2, isqrt(limit) + 1):
        s[p * p :: p * p] = False
    return s
