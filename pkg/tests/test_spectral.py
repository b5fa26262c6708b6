import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from genpaley import ntheory as nt, paley, qchar, spectral
from genpaley.errors import ContractError, ParityError
from genpaley.spectral import AlgebraicEigenvalue as AE


def numeric_multiset(spec):
    return sorted(np.round(spec.expand_numeric().real, 9).tolist())


def test_p5_matches_cycle_eigenvalues():
    spec = spectral.closed_form_spectrum(5)
    oracle = sorted(round(2 * math.cos(2 * math.pi * k / 5), 9) for k in range(5))
    assert numeric_multiset(spec) == oracle
    assert spec.multiplicity(2) == 1
    assert spec.multiplicity(AE(Fraction(-1, 2), Fraction(1, 2), 5)) == 2


def test_p8_matches_cycle_eigenvalues():
    spec = spectral.closed_form_spectrum(8)
    oracle = sorted(round(2 * math.cos(math.pi * k / 4), 9) for k in range(8))
    assert numeric_multiset(spec) == oracle
    assert spec.multiplicity(AE(0, Fraction(1, 2), 8)) == 2
    assert spec.multiplicity(-2) == 1 and spec.multiplicity(0) == 2


def test_p21_closed_form():
    canon = spectral.closed_form_spectrum(21).canonicalize()
    assert canon == {
        AE.rational(6, 21): 1,
        AE.rational(-3, 21): 2,
        AE.rational(-1, 21): 6,
        AE(Fraction(1, 2), Fraction(1, 2), 21): 6,
        AE(Fraction(1, 2), Fraction(-1, 2), 21): 6,
    }


def test_entries_keyed_by_origin():
    spec = spectral.closed_form_spectrum(24)
    origins = [e.origin for e in spec.entries]
    assert origins == [f"d={d}" for d in nt.divisors(24)[:-1]] + ["+sqrt", "-sqrt"]
    # mu(d) = 0 divisors all give eigenvalue 0, merged only on canonicalization
    zeros = [e for e in spec.entries if e.eigenvalue == AE.rational(0, 24)]
    assert len(zeros) > 1
    assert spec.multiplicity(0) == sum(e.multiplicity for e in zeros)


def test_dft_examples():
    assert abs(spectral.dft_spectrum(paley.build(5))[0] - 2) < 1e-12
    assert abs(spectral.dft_spectrum(paley.build(8))[4] + 2) < 1e-12
    assert abs(spectral.dft_spectrum(paley.build(12))[1] - math.sqrt(3)) < 1e-12


def test_dft_against_dense_eigensolver():
    for delta in (13, 21, 24, 28, -7, -15, -20):
        g = paley.build(delta)
        dense = np.linalg.eigvals(g.adjacency_matrix().astype(float))
        assert spectral.spectra_match(spectral.closed_form_spectrum(delta), dense, 1e-8)


def test_spectra_match_contract():
    exact = spectral.closed_form_spectrum(5)
    numeric = spectral.dft_spectrum(paley.build(5))
    assert spectral.spectra_match(exact, numeric, 1e-9)
    assert not spectral.spectra_match(exact, numeric + 1e-6, 1e-9)
    with pytest.raises(ContractError):
        spectral.spectra_match(spectral.closed_form_spectrum(8), spectral.dft_spectrum(paley.build(12)))


def test_closed_form_matches_dft_both_signs():
    for d in qchar.fundamental_discriminants(3, 300, sign=0):
        exact = spectral.closed_form_spectrum(d)
        assert spectral.spectra_match(exact, spectral.dft_spectrum(paley.build(d)), 1e-9), d.delta


def test_spectrum_invariants():
    for d in qchar.fundamental_discriminants(3, 1000):
        spec = spectral.closed_form_spectrum(d)
        n, phi = d.conductor, nt.euler_phi(d.conductor)
        assert spec.size == n
        assert spec.trace() == AE.rational(0, d.delta)
        assert spec.power_sum(2) == AE.rational(Fraction(n * phi, 2), d.delta)
        assert spec.multiplicity(Fraction(phi, 2)) == 1
        assert spec.multiplicity(Fraction(-phi, 2)) == (1 if n % 2 == 0 else 0)
        for e in spec.entries:
            assert e.eigenvalue.radical_coeff in (0, Fraction(1, 2), Fraction(-1, 2))


def test_spectrum_json():
    rows = spectral.closed_form_spectrum(5).to_json()
    assert rows[0] == {"rational": "-1/2", "radical_coeff": "-1/2", "radicand": 5, "multiplicity": 2}
    assert sum(r["multiplicity"] for r in rows) == 5


fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)


@given(fractions, fractions, st.integers(min_value=0, max_value=500))
def test_quadratic_sign_matches_float(a, b, n):
    value = float(a) + float(b) * math.sqrt(n)
    s = spectral.quadratic_sign(a, b, n)
    if abs(value) > 1e-9:
        assert s == (1 if value > 0 else -1)
    else:
        # exact zero only if both parts cancel algebraically
        assert s == 0 or abs(value) > 0


@given(fractions, fractions, fractions, fractions)
def test_field_arithmetic(a, b, c, d):
    x, y = AE(a, b, 7), AE(c, d, 7)
    assert abs((x * y).numeric() - x.numeric() * y.numeric()) < 1e-9
    assert abs((x + y).numeric() - (x.numeric() + y.numeric())) < 1e-12
    assert abs(x).sign() >= 0


@pytest.mark.parametrize(
    "delta, expected",
    [(5, AE(Fraction(1, 2), Fraction(1, 2), 5)), (21, AE.rational(3, 21)), (69, AE.rational(11, 69))],
)
def test_lambda_g_examples(delta, expected):
    assert spectral.lambda_g(delta) == expected


def test_lambda_g_excludes_minus_r():
    lam = spectral.lambda_g(8)
    assert lam == AE(0, Fraction(1, 2), 8)


def test_lambda_g_against_numeric():
    for d in qchar.fundamental_discriminants(3, 3000):
        r = nt.euler_phi(d.conductor) / 2
        values = np.abs(spectral.closed_form_spectrum(d).expand_numeric().real)
        oracle = values[values < r - 1e-9].max()
        lam = float(spectral.lambda_g(d))
        assert abs(lam - oracle) < 1e-9
        assert lam < r


def test_lambda_g_parity():
    with pytest.raises(ParityError):
        spectral.lambda_g(-4)
