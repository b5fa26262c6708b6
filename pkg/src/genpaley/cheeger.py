"""Cheeger number of P_delta: the exact alpha bound, its L(2, chi) form, and brute force for small D."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import ntheory as nt
from .errors import DomainError, ParityError, UnsupportedRangeError
from .paley import PaleyGraph, build, vertex_mask
from .qchar import FundamentalDiscriminant, as_discriminant, l_two_exact, quadratic_character
from .spectral import fraction_str

DEFAULT_BRUTE_CAP = 20
MAX_BRUTE_CAP = 24


def _positive(disc: FundamentalDiscriminant | int) -> FundamentalDiscriminant:
    disc = as_discriminant(disc)
    if disc.delta <= 0:
        raise ParityError(f"Cheeger bounds need delta > 0, got {disc.delta}")
    return disc


def _half_offsets(g: PaleyGraph) -> list[int]:
    # a = D/2 never carries an edge (gcd(D/2, D) > 1), so a < D - a picks each edge class once
    return [a for a in g.offsets.tolist() if a < g.order - a]


def boundary_size(g: PaleyGraph, vertices: Iterable[int]) -> int:
    """Number of undirected edges with exactly one endpoint in the vertex set."""
    if g.directed:
        raise ParityError(f"boundary_size needs an undirected graph, got delta = {g.delta}")
    mask = vertex_mask(g, vertices)
    k = int(mask.sum())
    if k == 0 or k == g.order:
        raise DomainError("vertex set must be a nonempty proper subset")
    return sum(int(np.count_nonzero(mask ^ np.roll(mask, -a))) for a in _half_offsets(g))


def alpha_list(disc: FundamentalDiscriminant | int) -> list[int]:
    """The residues 1 <= a <= D//2 with chi(a) = 1."""
    disc = _positive(disc)
    half = disc.conductor // 2
    values = quadratic_character(disc).values
    return (np.flatnonzero(values[: half + 1] == 1)).tolist()


def _twice_alpha_sum(disc: FundamentalDiscriminant) -> int:
    half = disc.conductor // 2
    values = quadratic_character(disc).values[: half + 1]
    a = np.arange(half + 1, dtype=np.int64)
    return 2 * int(a[values == 1].sum())


def half_interval_boundary(disc: FundamentalDiscriminant | int) -> int:
    """|boundary of {0, ..., D//2 - 1}| as twice the sum of the alpha list."""
    disc = _positive(disc)
    value = _twice_alpha_sum(disc)
    structural = boundary_size(build(disc), range(disc.conductor // 2))
    assert value == structural, f"half-interval boundary {value} != structural count {structural}"
    return value


def alpha_bound(disc: FundamentalDiscriminant | int) -> Fraction:
    """alpha = 2 * sum(alpha_i) / floor(D/2), exactly."""
    disc = _positive(disc)
    return Fraction(_twice_alpha_sum(disc), disc.conductor // 2)


def _l_term(disc: FundamentalDiscriminant, l_value: float) -> float:
    n = disc.conductor
    chi2 = quadratic_character(disc)(2)
    return 8 * n * math.sqrt(n) / math.pi**2 * (1 - chi2 / 4) * l_value


def alpha_via_lfunction(disc: FundamentalDiscriminant | int, l_value: float | None = None) -> float:
    """alpha from (D phi - mu phi - (8 D sqrt(D)/pi^2)(1 - chi(2)/4) L(2, chi)) / (8 floor(D/2)).

    ``l_value`` defaults to L(2, chi) obtained from the character sum; pass an
    independently computed value to test both identities end to end.
    """
    disc = _positive(disc)
    n = disc.conductor
    if l_value is None:
        l_value = l_two_exact(quadratic_character(disc))
    phi, mu = nt.euler_phi(n), nt.mobius(n)
    return (n * phi - mu * phi - _l_term(disc, l_value)) / (8 * (n // 2))


def alpha_remark_form(disc: FundamentalDiscriminant | int, l_value: float | None = None) -> float:
    """The same quantity written as phi(D)/4 minus a correction, split on the parity of D."""
    disc = _positive(disc)
    n = disc.conductor
    if l_value is None:
        l_value = l_two_exact(quadratic_character(disc))
    phi, mu = nt.euler_phi(n), nt.mobius(n)
    if n % 2 == 0:
        chi2 = quadratic_character(disc)(2)
        return phi / 4 - 2 * math.sqrt(n) / math.pi**2 * (1 - chi2 / 4) * l_value
    return phi / 4 - (_l_term(disc, l_value) - (1 - mu) * phi) / (4 * (n - 1))


def check_alpha_corollary(disc: FundamentalDiscriminant | int) -> bool:
    """Strict comparison alpha < phi(D)/4 in exact arithmetic."""
    disc = _positive(disc)
    return alpha_bound(disc) < Fraction(nt.euler_phi(disc.conductor), 4)


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x)


def brute_force_cheeger(disc: FundamentalDiscriminant | int, cap: int = DEFAULT_BRUTE_CAP) -> Fraction:
    """min |boundary F| / |F| over all F with 0 < |F| <= D/2, by subset enumeration."""
    disc = _positive(disc)
    if cap > MAX_BRUTE_CAP:
        raise UnsupportedRangeError(f"brute-force cap is limited to {MAX_BRUTE_CAP}, got {cap}")
    n = disc.conductor
    if n > cap:
        raise UnsupportedRangeError(f"brute force enumerates 2^D subsets; D = {n} exceeds cap {cap}")
    g = build(disc)
    offsets = _half_offsets(g)
    full = np.uint32((1 << n) - 1)
    half = n // 2
    best = [None] * (half + 1)
    chunk = 1 << 18
    for start in range(1, 1 << n, chunk):
        m = np.arange(start, min(start + chunk, 1 << n), dtype=np.uint32)
        size = _popcount(m)
        keep = size <= half
        m, size = m[keep], size[keep]
        boundary = np.zeros(m.shape, dtype=np.int64)
        for a in offsets:
            rot = ((m >> np.uint32(a)) | (m << np.uint32(n - a))) & full
            boundary += _popcount(m ^ rot)
        for k in range(1, half + 1):
            sel = boundary[size == k]
            if sel.size:
                low = int(sel.min())
                if best[k] is None or low < best[k]:
                    best[k] = low
    return min(Fraction(b, k) for k, b in enumerate(best) if k and b is not None)


@dataclass(frozen=True)
class CheegerReport:
    delta: int
    alpha: Fraction
    alpha_numeric: float
    lfunction_form: float
    phi_quarter: Fraction
    brute_force_h: Fraction | None
    witness_size: int
    witness_boundary: int

    @property
    def alpha_below_phi_quarter(self) -> bool:
        return self.alpha < self.phi_quarter

    def to_json(self) -> dict:
        def real(x: float) -> float:
            return float(f"{x:.12g}")

        return {
            "delta": self.delta,
            "alpha": fraction_str(self.alpha),
            "alpha_numeric": real(self.alpha_numeric),
            "lfunction_form": real(self.lfunction_form),
            "phi_quarter": fraction_str(self.phi_quarter),
            "alpha_lt_phi_quarter": self.alpha_below_phi_quarter,
            "brute_force_h": None if self.brute_force_h is None else fraction_str(self.brute_force_h),
            "alpha_minus_h": None if self.brute_force_h is None else fraction_str(self.alpha - self.brute_force_h),
            "boundary_set_witness": {
                "F": f"0..{self.witness_size - 1}",
                "size": self.witness_size,
                "boundary": self.witness_boundary,
            },
        }


def cheeger_report(disc: FundamentalDiscriminant | int, brute_cap: int = DEFAULT_BRUTE_CAP) -> CheegerReport:
    disc = _positive(disc)
    n = disc.conductor
    alpha = alpha_bound(disc)
    return CheegerReport(
        delta=disc.delta,
        alpha=alpha,
        alpha_numeric=float(alpha),
        lfunction_form=alpha_via_lfunction(disc),
        phi_quarter=Fraction(nt.euler_phi(n), 4),
        brute_force_h=brute_force_cheeger(disc, brute_cap) if n <= brute_cap else None,
        witness_size=n // 2,
        witness_boundary=half_interval_boundary(disc),
    )
