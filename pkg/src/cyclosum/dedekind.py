"""Weighted sums over the nontrivial n-th roots of unity and their
generating series, plus totative power sums and Ramanujan sums.

The central object is

    e_sum(m, n, r, p, lam, C)
        = sum_{k=1}^{n-1} zeta^{-kr} H_{m-1}^{(p)}(q, lam, zeta^{-k}) C_{-k}
          / (1 - zeta^k)^p,

a polynomial in q of degree <= m-1 with coefficients in Q(zeta_n).  It is
undefined exactly when lam hits one of the zeta^{-k} (for rational lam that
means lam = -1 with n even); those parameters raise ParameterCollision.
lam = 1 is perfectly legal here.

g_series_oracle is the independent series route: the closed form of the
generating function whose EGF coefficient m must equal e_sum at index m+1.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .appell import frobenius_euler
from .arith import divisors, euler_phi, moebius, totatives
from .cyclotomic import CycloNum, normalize_scalar, zeta_pow
from .errors import ParameterCollision
from .qpoly import QPoly, q
from .series import TruncSeries
from .spectra import PeriodicSeq

__all__ = [
    "e_sum",
    "g_series_oracle",
    "v_sum",
    "ramanujan_sum",
    "euler_phi",
    "moebius",
    "totatives",
    "divisors",
]


def check_lambda_collision(n: int, lam):
    """Normalize lam and reject lam in {zeta_n^{-k} : 1 <= k < n}, naming k."""
    lam = normalize_scalar(lam)
    for k in range(1, n):
        if zeta_pow(n, -k) == lam:
            raise ParameterCollision(
                f"lambda = zeta_{n}^(-{k}): the k={k} term of the sum divides by zero"
            )
    return lam


@lru_cache(maxsize=None)
def _unit_pow(n: int, k: int, e: int) -> CycloNum:
    """(1 - zeta_n^k)**e, any integer e; k != 0 mod n keeps the base nonzero."""
    return (1 - zeta_pow(n, k)) ** e


def e_sum(m: int, n: int, r: int, p: int, lam, c_seq: PeriodicSeq) -> QPoly:
    """The Dedekind-type sum as a polynomial in q over Q(zeta_n)."""
    if m < 1:
        raise ValueError("m must be >= 1 (the summand uses index m-1)")
    if n < 2:
        raise ValueError("n must be >= 2 (the sum over 1 <= k < n is empty)")
    if c_seq.n != n:
        raise ValueError(f"sequence period {c_seq.n} differs from n = {n}")
    lam = check_lambda_collision(n, lam)
    return _e_sum(m, n, r % n, p, lam, c_seq)


@lru_cache(maxsize=None)
def _e_sum(m: int, n: int, r: int, p: int, lam, c_seq: PeriodicSeq) -> QPoly:
    acc = QPoly.zero()
    for k in range(1, n):
        w = zeta_pow(n, -k * r) * c_seq[-k] * _unit_pow(n, k, -p)
        if not w:
            continue
        h = frobenius_euler(m - 1, p, lam, zeta_pow(n, -k))
        acc = acc + h * w
    return acc


def g_series_oracle(n: int, r: int, p: int, lam, c_seq: PeriodicSeq, order: int) -> TruncSeries:
    """Closed form (-1)^p sum_k zeta^{-k(r+p)} C_{-k} e^{qt}/(lam e^t - zeta^{-k}),
    truncated; EGF coefficient m carries e_sum at index m+1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if c_seq.n != n:
        raise ValueError(f"sequence period {c_seq.n} differs from n = {n}")
    if order < 0:
        raise ValueError("order must be >= 0")
    lam = check_lambda_collision(n, lam)
    eq = TruncSeries.exp_linear(q, order)
    acc = TruncSeries.zero(order)
    for k in range(1, n):
        w = zeta_pow(n, -k * (r + p)) * c_seq[-k]
        if not w:
            continue
        den = TruncSeries.exp_affine(lam, -zeta_pow(n, -k), order)
        acc = acc + (den.inverse() * eq) * w
    return acc * (-1 if p % 2 else 1)


def v_sum(n: int, k: int, lam):
    """V_n^{(k)}(lam) = sum over totatives j of n of j^k lam^j."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if k < 0:
        raise ValueError("k must be >= 0")
    lam = normalize_scalar(lam)
    acc = 0
    for j in totatives(n):
        acc = j**k * lam**j + acc
    return acc


def ramanujan_sum(n: int, k: int) -> Fraction:
    """c_n(k) = sum over totatives j of zeta_n^{kj}; rational by Galois
    invariance (the totative powers permute under every automorphism)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = CycloNum.of(n, 0)
    for j in totatives(n):
        acc = acc + zeta_pow(n, k * j)
    r = acc.is_rational()
    if r is None:
        raise ArithmeticError(f"c_{n}({k}) came out irrational; reduction bug")
    return r
