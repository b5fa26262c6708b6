"""Verification suite: each closed form checked against its independent oracle over a range of discriminants.

``run`` is shared by ``genpaley verify`` and ``tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import cheeger, ntheory as nt, paley, qchar, ramanujan, spectral

# test-only: when set, called with a criterion number; returning True forces that criterion to fail
FAULT_HOOK: Callable[[int], bool] | None = None


@dataclass(frozen=True)
class VerifyConfig:
    spectrum_max_d: int = 500
    ramanujan_max_d: int = 20_000
    boundary_max_d: int = 2_000
    alpha_identity_max_d: int = 1_000
    corollary_max_d: int = 100_000
    brute_max_d: int = 20
    gauss_max_d: int = 200
    structure_max_d: int = 2_000
    kernel_max_n: int = 100
    baum_max_d: int = 10_000
    kronecker_range: int = 200
    legendre_max_p: int = 100
    spectrum_tol: float = 1e-9
    alpha_tol: float = 1e-8
    gauss_tol: float = 1e-9
    kernel_tol: float = 1e-9


FULL = VerifyConfig()
FAST = VerifyConfig(
    ramanujan_max_d=500,
    boundary_max_d=500,
    alpha_identity_max_d=500,
    corollary_max_d=500,
    structure_max_d=500,
    baum_max_d=500,
    kronecker_range=40,
)
LEVELS = {"fast": FAST, "full": FULL}


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _summary(failures: list, checked: int, what: str) -> tuple[bool, str]:
    if failures:
        return False, f"{len(failures)}/{checked} {what} failed, first: {failures[:5]}"
    return True, f"{checked} {what} ok"


def spectrum_theorem(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.spectrum_max_d, sign=0)
    bad = [
        d.delta
        for d in discs
        if not spectral.spectra_match(
            spectral.closed_form_spectrum(d), spectral.dft_spectrum(paley.build(d)), cfg.spectrum_tol
        )
    ]
    return _summary(bad, len(discs), "spectra (both signs)")


def ramanujan_classification(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.ramanujan_max_d)
    bad = [d.delta for d in discs if not ramanujan.classify_ramanujan(d).consistent]
    spots = {5: True, 8: True, 12: True, 21: True, 69: False}
    for delta, expected in spots.items():
        if ramanujan.classify_ramanujan(delta).is_ramanujan != expected:
            bad.append(f"spot {delta}")
    lam = ramanujan.is_ramanujan_spectral(69)[1]
    if lam != spectral.AlgebraicEigenvalue.rational(11, 69) or not 11 > 2 * math.sqrt(21):
        bad.append("spot 69 witness")
    ok, detail = _summary(bad, len(discs), "classifications")
    return ok, detail + "; spot values 5,8,12,21 Ramanujan, 69 not (lambda=11)"


def lemma_agreement(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = [d for d in qchar.fundamental_discriminants(3, cfg.ramanujan_max_d) if not nt.is_prime(d.conductor)]
    bad = [
        d.delta for d in discs if ramanujan.lemma_inequalities(d) != ramanujan.is_ramanujan_spectral(d)[0]
    ]
    return _summary(bad, len(discs), "composite D")


def cheeger_proposition(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.boundary_max_d)
    bad = []
    for d in discs:
        structural = cheeger.boundary_size(paley.build(d), range(d.conductor // 2))
        if 2 * sum(cheeger.alpha_list(d)) != structural:
            bad.append(d.delta)
    return _summary(bad, len(discs), "half-interval boundaries")


def alpha_identity(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.alpha_identity_max_d)
    bad = []
    worst = 0.0
    for d in discs:
        exact = float(cheeger.alpha_bound(d))
        l_indep = qchar.l_two_hurwitz(qchar.quadratic_character(d))
        for value in (cheeger.alpha_via_lfunction(d), cheeger.alpha_via_lfunction(d, l_indep)):
            err = abs(value - exact)
            worst = max(worst, err)
            if not err < cfg.alpha_tol:
                bad.append(d.delta)
    ok, detail = _summary(bad, len(discs), "alpha identities")
    return ok, f"{detail}; max error {worst:.2e}"


def alpha_corollary(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = [d for d in qchar.fundamental_discriminants(8, cfg.corollary_max_d)]
    bad = [d.delta for d in discs if not cheeger.check_alpha_corollary(d)]
    a5, q5 = cheeger.alpha_bound(5), Fraction(nt.euler_phi(5), 4)
    rel = "<" if a5 < q5 else "=" if a5 == q5 else ">"
    ok, detail = _summary(bad, len(discs), "strict alpha < phi/4 (D >= 8)")
    return ok, f"{detail}; reported D=5: alpha={a5} {rel} phi/4={q5}"


def brute_force_cheeger(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.brute_max_d)
    bad = []
    seen = []
    for d in discs:
        h = cheeger.brute_force_cheeger(d, cap=max(cfg.brute_max_d, d.conductor))
        alpha = cheeger.alpha_bound(d)
        seen.append(f"{d.delta}:h={h},alpha={alpha}")
        if h > alpha:
            bad.append(d.delta)
    for delta, h_expected in ((5, Fraction(1)), (8, Fraction(1, 2)), (12, Fraction(1, 3))):
        if not cheeger.brute_force_cheeger(delta) == cheeger.alpha_bound(delta) == h_expected:
            bad.append(f"cycle {delta}")
    ok, detail = _summary(bad, len(discs), "h <= alpha checks")
    return ok, f"{detail}; {' '.join(seen)}"


def gauss_sums(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.gauss_max_d, sign=0)
    bad = []
    worst = 0.0
    for d in discs:
        character = qchar.quadratic_character(d)
        root = qchar.sqrt_delta(d)
        n = d.conductor
        a = np.arange(n)
        # all b at once: G(b) = sum_a chi(a) zeta^(ab)
        phases = np.exp(2j * np.pi * (np.outer(a, a) % n) / n)
        sums = phases @ character.values.astype(np.float64)
        err = float(np.max(np.abs(sums - character.values * root)))
        for b in (1, 2, n - 1):
            err = max(err, abs(qchar.gauss_sum(character, b) - character(b) * root))
        worst = max(worst, err)
        if not err < cfg.gauss_tol:
            bad.append(d.delta)
    ok, detail = _summary(bad, len(discs), "discriminants")
    return ok, f"{detail}; max error {worst:.2e}"


def structure_corollaries(cfg: VerifyConfig) -> tuple[bool, str]:
    discs = qchar.fundamental_discriminants(3, cfg.structure_max_d)
    bad = []
    for d in discs:
        g = paley.build(d)
        n, phi = d.conductor, nt.euler_phi(d.conductor)
        parts = paley.bipartition(g)
        if (parts is not None) != (d.delta % 2 == 0):
            bad.append((d.delta, "bipartite"))
        elif parts is not None:
            odd = frozenset(range(1, n, 2))
            if parts != (odd, frozenset(range(0, n, 2))):
                bad.append((d.delta, "bipartition"))
        if paley.is_cycle(g) != (d.delta in (5, 8, 12)):
            bad.append((d.delta, "cycle"))
        if paley.degree(g) != phi // 2 or not paley.is_connected(g):
            bad.append((d.delta, "degree/connectivity"))
        spec = spectral.closed_form_spectrum(d)
        zero = spectral.AlgebraicEigenvalue.rational(0, d.delta)
        if spec.size != n or spec.trace() != zero:
            bad.append((d.delta, "size/trace"))
        if spec.power_sum(2) != spectral.AlgebraicEigenvalue.rational(Fraction(n * phi, 2), d.delta):
            bad.append((d.delta, "sum of squares"))
    return _summary(bad, len(discs), "graphs")


def kernel_identities(cfg: VerifyConfig) -> tuple[bool, str]:
    bad = []
    top = cfg.kernel_max_n
    for n in range(1, top + 1):
        for m in range(1, top + 1):
            if abs(nt.ramanujan_sum_direct(n, m) - nt.ramanujan_sum(n, m)) >= cfg.kernel_tol:
                bad.append(("c_n(m)", n, m))
        if nt.ramanujan_sum(n, 1) != nt.mobius(n):
            bad.append(("c_n(1)", n))
    for d in range(3, cfg.baum_max_d + 1):
        try:
            nt.coprime_half_sum(d)
        except ArithmeticError:
            bad.append(("baum", d))
    span = cfg.kronecker_range
    ns = np.arange(-span, span + 1)
    products = np.outer(ns, ns)
    keys = np.unique(products)
    where = np.searchsorted(keys, products)
    nonzero = products != 0
    for a in range(-span, span + 1):
        for p in range(3, cfg.legendre_max_p + 1):
            if nt.is_prime(p) and nt.kronecker_symbol(a, p) != nt.legendre_symbol(a, p):
                bad.append(("legendre", a, p))
        row = np.array([nt.kronecker_symbol(a, int(n)) for n in keys])
        base = row[np.searchsorted(keys, ns)]
        if np.any((row[where] != np.outer(base, base)) & nonzero):
            bad.append(("kronecker", a))
    if bad:
        return False, f"{len(bad)} identity failures, first: {bad[:5]}"
    return True, f"c_n(m) n,m<={top}; c_n(1)=mu(n); Baum D<={cfg.baum_max_d}; Kronecker/Legendre |a|,|n|<={span}"


CRITERIA: list[tuple[int, str, Callable[[VerifyConfig], tuple[bool, str]]]] = [
    (1, "spectrum theorem vs DFT", spectrum_theorem),
    (2, "Ramanujan classification vs spectral", ramanujan_classification),
    (3, "composite-D lemma vs spectral", lemma_agreement),
    (4, "half-interval boundary proposition", cheeger_proposition),
    (5, "alpha identity via L(2, chi)", alpha_identity),
    (6, "alpha < phi(D)/4 corollary", alpha_corollary),
    (7, "brute-force Cheeger number", brute_force_cheeger),
    (8, "Gauss sums", gauss_sums),
    (9, "structure corollaries", structure_corollaries),
    (10, "kernel identities", kernel_identities),
]


def run_criterion(number: int, cfg: VerifyConfig = FULL) -> CriterionResult:
    _, name, fn = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    passed, detail = fn(cfg)
    if FAULT_HOOK is not None and FAULT_HOOK(number):
        passed, detail = False, "injected fault"
    return CriterionResult(number, name, passed, detail, time.perf_counter() - start)


def run(cfg: VerifyConfig = FULL, report: Callable[[str], None] | None = print) -> list[CriterionResult]:
    results = []
    for number, _, _ in CRITERIA:
        result = run_criterion(number, cfg)
        if report is not None:
            report(result.line())
        results.append(result)
    return results
