from fractions import Fraction
from itertools import combinations

import pytest

from genpaley import cheeger, ntheory as nt, paley, qchar
from genpaley.errors import DomainError, ParityError, UnsupportedRangeError


def explicit_boundary(g, subset):
    inside = set(subset)
    return sum(1 for u, v in g.edges() if (u in inside) != (v in inside))


def slow_cheeger(delta):
    """Combinations-based oracle over explicit edge lists."""
    g = paley.build(delta)
    n = g.order
    edges = list(g.edges())
    best = None
    for k in range(1, n // 2 + 1):
        for subset in combinations(range(n), k):
            inside = set(subset)
            b = sum(1 for u, v in edges if (u in inside) != (v in inside))
            ratio = Fraction(b, k)
            if best is None or ratio < best:
                best = ratio
    return best


@pytest.mark.parametrize("delta, subset, expected", [(5, {0, 1}, 2), (8, {0, 1, 2, 3}, 2)])
def test_boundary_examples(delta, subset, expected):
    assert cheeger.boundary_size(paley.build(delta), subset) == expected


def test_boundary_rejects_trivial_sets():
    g = paley.build(13)
    with pytest.raises(DomainError):
        cheeger.boundary_size(g, range(13))
    with pytest.raises(DomainError):
        cheeger.boundary_size(g, [])
    with pytest.raises(ParityError):
        cheeger.boundary_size(paley.build(-7), [0])


def test_boundary_matches_explicit_count():
    import random

    rng = random.Random(3)
    for delta in (13, 21, 24, 28, 40, 61):
        g = paley.build(delta)
        for _ in range(20):
            subset = rng.sample(range(g.order), rng.randrange(1, g.order))
            assert cheeger.boundary_size(g, subset) == explicit_boundary(g, subset)


@pytest.mark.parametrize("delta, alphas, boundary", [(5, [1], 2), (8, [1], 2), (21, [1, 4, 5], 20)])
def test_half_interval_examples(delta, alphas, boundary):
    assert cheeger.alpha_list(delta) == alphas
    assert cheeger.half_interval_boundary(delta) == boundary


def test_half_interval_proposition():
    for d in qchar.fundamental_discriminants(3, 2000):
        g = paley.build(d)
        assert cheeger.half_interval_boundary(d) == cheeger.boundary_size(g, range(d.conductor // 2))


@pytest.mark.parametrize("delta, alpha", [(5, Fraction(1)), (8, Fraction(1, 2)), (12, Fraction(1, 3)), (21, Fraction(2))])
def test_alpha_examples(delta, alpha):
    assert cheeger.alpha_bound(delta) == alpha
    assert abs(cheeger.alpha_via_lfunction(delta) - float(alpha)) < 1e-8


def test_alpha_identities():
    for d in qchar.fundamental_discriminants(3, 1000):
        alpha = cheeger.alpha_bound(d)
        assert alpha == Fraction(cheeger.half_interval_boundary(d), d.conductor // 2)
        coprime = nt.coprime_half_sum(d.conductor)
        weighted = qchar.weighted_half_sum(qchar.quadratic_character(d))
        assert alpha == Fraction(coprime + weighted, d.conductor // 2)
        independent = qchar.l_two_hurwitz(qchar.quadratic_character(d))
        assert abs(cheeger.alpha_via_lfunction(d, independent) - float(alpha)) < 1e-8
        assert abs(cheeger.alpha_remark_form(d, independent) - float(alpha)) < 1e-8


def test_cycle_remark_values():
    assert cheeger.alpha_bound(5) == Fraction(4, 5 - 1)
    assert cheeger.alpha_bound(8) == Fraction(4, 8)
    assert cheeger.alpha_bound(12) == Fraction(4, 12)


def test_corollary():
    assert cheeger.check_alpha_corollary(21)
    assert cheeger.check_alpha_corollary(8)
    assert cheeger.check_alpha_corollary(12)
    assert cheeger.check_alpha_corollary(13)
    # D = 5 is the equality case alpha = phi(5)/4 = 1
    assert not cheeger.check_alpha_corollary(5)
    assert cheeger.alpha_bound(5) == Fraction(nt.euler_phi(5), 4)


@pytest.mark.parametrize("delta", [5, 8, 12, 13, 17])
def test_brute_force_matches_slow_oracle(delta):
    assert cheeger.brute_force_cheeger(delta) == slow_cheeger(delta)


@pytest.mark.parametrize("delta, h", [(5, Fraction(1)), (8, Fraction(1, 2)), (12, Fraction(1, 3))])
def test_brute_force_cycles(delta, h):
    assert cheeger.brute_force_cheeger(delta) == h == cheeger.alpha_bound(delta)


def test_brute_force_below_alpha():
    for d in qchar.fundamental_discriminants(3, 24):
        assert cheeger.brute_force_cheeger(d, cap=24) <= cheeger.alpha_bound(d)


def test_brute_force_caps():
    with pytest.raises(UnsupportedRangeError):
        cheeger.brute_force_cheeger(21)
    with pytest.raises(UnsupportedRangeError):
        cheeger.brute_force_cheeger(5, cap=25)


def test_report():
    report = cheeger.cheeger_report(13)
    assert report.alpha == Fraction(8, 3)
    assert report.brute_force_h == Fraction(8, 3)
    assert report.alpha < report.phi_quarter
    assert abs(report.alpha_numeric - report.lfunction_form) < 1e-8
    payload = report.to_json()
    assert payload["alpha"] == "8/3"
    assert payload["phi_quarter"] == "3/1"
    assert payload["alpha_numeric"] == 2.66666666667
    assert payload["boundary_set_witness"] == {"F": "0..5", "size": 6, "boundary": 16}
    assert cheeger.cheeger_report(21).brute_force_h is None


def test_negative_rejected():
    for fn in (cheeger.alpha_bound, cheeger.alpha_via_lfunction, cheeger.check_alpha_corollary, cheeger.half_interval_boundary):
        with pytest.raises(ParityError):
            fn(-3)
