"""Dedekind-type sums, totative power sums, Ramanujan sums."""
from fractions import Fraction
from math import gcd

import pytest

from cyclosum.arith import euler_phi, moebius
from cyclosum.cyclotomic import is_rational, rational_poly
from cyclosum.dedekind import e_sum, g_series_oracle, ramanujan_sum, v_sum
from cyclosum.errors import ParameterCollision
from cyclosum.qpoly import QPoly
from cyclosum.spectra import PeriodicSeq, family


def test_e_sum_hand_value():
    # single term at n=2: C_1 H_0^{(1)}(q,2,-1)/(1-(-1)) = 1 * (2/3) / 2
    c = PeriodicSeq(2, (Fraction(0), Fraction(1)))
    poly = e_sum(1, 2, 0, 1, 2, c)
    assert rational_poly(poly) == QPoly((Fraction(1, 3),))


def test_e_sum_delta_vanishes():
    for n in (2, 3, 5):
        for m in (1, 2, 4):
            assert e_sum(m, n, 1, 1, 2, family("delta", n)) == QPoly.zero()


def test_e_sum_degree_bound():
    c = family("ramanujan", 5)
    for m in (1, 2, 3, 5):
        poly = e_sum(m, 5, 0, 1, 3, c)
        assert poly.degree is None or poly.degree <= m - 1


def test_e_sum_collision_names_the_term():
    c = family("ramanujan", 4)
    with pytest.raises(ParameterCollision, match="k=2"):
        e_sum(2, 4, 0, 1, -1, c)
    # odd n never collides for rational lambda
    assert e_sum(2, 3, 0, 1, -1, family("ramanujan", 3)) is not None


def test_e_sum_validates_shape():
    c = family("ramanujan", 4)
    with pytest.raises(ValueError):
        e_sum(0, 4, 0, 1, 2, c)
    with pytest.raises(ValueError):
        e_sum(1, 5, 0, 1, 2, c)  # period mismatch


def test_e_sum_lambda_one_is_legal():
    poly = e_sum(1, 4, 0, 1, 1, family("fourier-dedekind", 4, a=1))
    assert is_rational(poly[0])


def test_e_sum_shift_r_by_period():
    c = family("ramanujan", 6)
    assert e_sum(3, 6, 1, 1, 2, c) == e_sum(3, 6, 7, 1, 2, c)


def test_v_sum_frozen_values():
    assert v_sum(6, 0, 2) == 34  # 2^1 + 2^5
    assert v_sum(6, 1, 1) == 6  # 1 + 5
    assert v_sum(4, 2, Fraction(1, 2)) == Fraction(1, 2) + 9 * Fraction(1, 8)


def test_v_sum_totient_facts():
    for n in range(2, 21):
        assert v_sum(n, 0, 1) == euler_phi(n)
        assert v_sum(n, 1, 1) == Fraction(n * euler_phi(n), 2)


def test_v_sum_guards():
    with pytest.raises(ValueError):
        v_sum(1, 0, 2)
    with pytest.raises(ValueError):
        v_sum(4, -1, 2)


def test_ramanujan_frozen_row():
    assert [ramanujan_sum(6, k) for k in range(6)] == [2, 1, -1, -2, -1, 1]


def test_ramanujan_is_rational_fraction():
    val = ramanujan_sum(12, 5)
    assert isinstance(val, Fraction)


def test_ramanujan_totient_and_moebius_columns():
    for n in range(1, 21):
        assert ramanujan_sum(n, 0) == euler_phi(n)
        assert ramanujan_sum(n, 1) == moebius(n)


def test_ramanujan_hoelder():
    # c_n(k) = mu(n/g) phi(n) / phi(n/g) with g = gcd(k, n)
    for n in range(1, 21):
        for k in range(n):
            g = gcd(k, n) if k else n
            want = Fraction(moebius(n // g) * euler_phi(n), euler_phi(n // g))
            assert ramanujan_sum(n, k) == want


def test_g_series_coefficients_are_e_sums():
    n, r, p, lam = 4, 1, 1, 2
    c = family("ramanujan", n)
    series = g_series_oracle(n, r, p, lam, c, order=5)
    for m in range(6):
        assert series[m] == e_sum(m + 1, n, r, p, lam, c)


def test_g_series_respects_collision():
    with pytest.raises(ParameterCollision):
        g_series_oracle(4, 0, 1, -1, family("ramanujan", 4), order=3)


def test_e_sum_rational_when_weights_are_galois_stable():
    # Fourier-Dedekind weights with rational lambda give rational coefficients
    for n in (3, 4, 5, 6):
        poly = e_sum(2, n, 1, 1, 2, family("fourier-dedekind", n, a=1))
        assert rational_poly(poly) is not None
