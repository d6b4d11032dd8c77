"""Appell-family polynomials by recurrence, with truncated-series oracles.

Two independent routes to the same objects on purpose: the recurrences
below are the production path, and series_oracle_B / series_oracle_H
extract the same polynomials from the defining generating functions via
series inversion.  Tests hold the two routes equal; do not fold them into
one.

B_m(q, lam) is the Apostol-Bernoulli polynomial, EGF t e^{qt}/(lam e^t - 1),
which at lam = 1 degenerates to the classical Bernoulli branch (the lam - 1
division disappears and degrees shift from m-1 to m).  H_m^{(p)}(q, lam,
gamma) is the generalized Frobenius-Euler polynomial, EGF
(1-gamma)^p e^{qt}/(lam e^t - gamma).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .cyclotomic import normalize_scalar
from .errors import InvalidPower, ParameterCollision
from .qpoly import QPoly, q
from .scalars import scalar_inv
from .series import TruncSeries


def apostol_bernoulli(m: int, lam) -> QPoly:
    """B_m(q, lam); the classical Bernoulli polynomial when lam = 1."""
    if m < 0:
        raise ValueError("index m must be >= 0")
    return _bernoulli(m, normalize_scalar(lam))


@lru_cache(maxsize=None)
def _bernoulli(m: int, lam) -> QPoly:
    if lam == 1:
        # sum_{i<=m} C(m+1,i) B_i(q) = (m+1) q^m, solved for B_m
        acc = QPoly.monomial(m, Fraction(m + 1))
        for i in range(m):
            acc = acc - comb(m + 1, i) * _bernoulli(i, lam)
        return acc * Fraction(1, m + 1)
    if m == 0:
        return QPoly.zero()
    # (lam-1) B_m = m q^{m-1} - lam sum_{i<m} C(m,i) B_i
    acc = QPoly.monomial(m - 1, Fraction(m))
    for i in range(m):
        acc = acc - comb(m, i) * (lam * _bernoulli(i, lam))
    return acc * scalar_inv(lam - 1)


def apostol_bernoulli_number(i: int, lam):
    """B_i(lam) := B_i(0, lam), the constant coefficient."""
    return apostol_bernoulli(i, lam)[0]


def _one_minus_pow(gamma, p: int):
    """(1 - gamma)**p for any integer p; caller excludes gamma = 1 when p < 0."""
    base = 1 - gamma
    if p >= 0:
        return base**p
    return scalar_inv(base) ** (-p)


def frobenius_euler(m: int, p: int, lam, gamma) -> QPoly:
    """H_m^{(p)}(q, lam, gamma).  Needs lam != gamma; p < 0 needs gamma != 1."""
    if m < 0:
        raise ValueError("index m must be >= 0")
    lam = normalize_scalar(lam)
    gamma = normalize_scalar(gamma)
    if lam == gamma:
        raise ParameterCollision("lambda equals gamma: defining denominator vanishes")
    if p < 0 and gamma == 1:
        raise InvalidPower("p < 0 with gamma = 1: the (1-gamma)^p factor degenerates")
    return _frob_euler(m, p, lam, gamma)


@lru_cache(maxsize=None)
def _frob_euler(m: int, p: int, lam, gamma) -> QPoly:
    w = _one_minus_pow(gamma, p)
    inv_lg = scalar_inv(lam - gamma)
    if m == 0:
        return QPoly((w * inv_lg,))
    # (lam-gamma) H_m = (1-gamma)^p q^m - lam sum_{i<m} C(m,i) H_i
    acc = QPoly.monomial(m, w)
    for i in range(m):
        acc = acc - comb(m, i) * (lam * _frob_euler(i, p, lam, gamma))
    return acc * inv_lg


def series_oracle_B(m_max: int, lam) -> list[QPoly]:
    """B_0..B_{m_max} read off the EGF t e^{qt}/(lam e^t - 1) directly."""
    lam = normalize_scalar(lam)
    t = m_max
    eq = TruncSeries.exp_linear(q, t)
    if lam == 1:
        # divide t through first: (e^t - 1)/t has coefficient 1/(k+1)
        den = TruncSeries([Fraction(1, k + 1) for k in range(t + 1)], t)
        s = den.inverse() * eq
    else:
        den = TruncSeries.exp_affine(lam, -1, t)
        s = (den.inverse() * eq).mul_t()
    return [s[i] for i in range(m_max + 1)]


def series_oracle_H(m_max: int, p: int, lam, gamma) -> list[QPoly]:
    """H_0..H_{m_max} read off (1-gamma)^p e^{qt}/(lam e^t - gamma)."""
    lam = normalize_scalar(lam)
    gamma = normalize_scalar(gamma)
    if lam == gamma:
        raise ParameterCollision("lambda equals gamma: defining denominator vanishes")
    if p < 0 and gamma == 1:
        raise InvalidPower("p < 0 with gamma = 1: the (1-gamma)^p factor degenerates")
    t = m_max
    w = _one_minus_pow(gamma, p)
    den = TruncSeries.exp_affine(lam, -gamma, t)
    s = (den.inverse() * TruncSeries.exp_linear(q, t)) * w
    return [s[i] for i in range(m_max + 1)]
