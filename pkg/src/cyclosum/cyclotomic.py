"""Exact arithmetic in Q(zeta_n), the field of n-th roots of unity.

Elements are reduced residues modulo the n-th cyclotomic polynomial, stored
as phi(n) integer numerators over one shared positive denominator.  Working
mod Phi_n (a field) rather than mod x^n - 1 (a ring with zero divisors)
keeps every nonzero element invertible, which the weighted root-of-unity
sums rely on.  The integer-vector loops go through the selected kernel
backend; see cyclosum._kernel.

Levels never mix: a rational embeds into any level, but zeta_m and zeta_n
of different levels refuse arithmetic rather than coerce.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

import mpmath

from . import _kernel as _K
from .arith import divisors, euler_phi
from .scalars import format_rational, parse_rational


def _int_divexact(num: list[int], den: list[int]) -> list[int]:
    # long division by a monic integer polynomial; remainder must vanish
    rem = list(num)
    db = len(den) - 1
    out = [0] * (len(rem) - db)
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if not c:
            continue
        out[top - db] = c
        for j, bv in enumerate(den):
            rem[top - db + j] -= c * bv
    if any(rem):
        raise ArithmeticError("inexact integer polynomial division")
    return out


@dataclass(frozen=True)
class CycloPolyMod:
    """The n-th cyclotomic polynomial, the reduction modulus for level n."""

    n: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> CycloPolyMod:
    """Phi_n(x), by exact division of x^n - 1 by Phi_d for proper d | n."""
    if n < 1:
        raise ValueError("cyclotomic level must be >= 1")
    p = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d < n:
            p = _int_divexact(p, list(cyclotomic_poly(d).coeffs))
    return CycloPolyMod(n, tuple(p))


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row i is x^(d+i) reduced mod Phi_n, for exponents d .. max(2d-2, d)."""
    phi = cyclotomic_poly(n)
    d = phi.degree
    first = tuple(-c for c in phi.coeffs[:d])
    rows = [first]
    for _ in range(max(d - 2, 0)):
        prev = rows[-1]
        carry = prev[d - 1]
        row = [carry * first[0]]
        for j in range(1, d):
            row.append(prev[j - 1] + carry * first[j])
        rows.append(tuple(row))
    return tuple(rows)


class CycloNum:
    """Element of Q(zeta_n): integer numerators nums over a positive den,
    fully cancelled, zero normalized to all-zero nums over 1."""

    __slots__ = ("level", "nums", "den")

    def __init__(self, level: int, nums, den: int = 1):
        # trusted fast path for normalized data lives in _make; this
        # constructor normalizes whatever it is given
        d = cyclotomic_poly(level).degree
        ns = list(nums)
        if len(ns) != d:
            raise ValueError(f"level {level} needs {d} coordinates, got {len(ns)}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            ns = [-v for v in ns]
        g = _K.vec_content(ns, den)
        if g > 1:
            ns = [v // g for v in ns]
            den //= g
        self.level = level
        self.nums = tuple(ns)
        self.den = den

    @classmethod
    def of(cls, level: int, value) -> CycloNum:
        """Embed an int, Fraction, or same-level CycloNum at this level."""
        if isinstance(value, CycloNum):
            if value.level == level:
                return value
            r = value.is_rational()
            if r is None:
                raise ValueError("cross-level cyclotomic coercion")
            value = r
        value = Fraction(value)
        d = cyclotomic_poly(level).degree
        return cls(level, [value.numerator] + [0] * (d - 1), value.denominator)

    @classmethod
    def from_coeffs(cls, level: int, coeffs) -> CycloNum:
        """Build from phi(n) rational coordinates."""
        fr = [Fraction(c) for c in coeffs]
        den = lcm(*(c.denominator for c in fr)) if fr else 1
        return cls(level, [c.numerator * (den // c.denominator) for c in fr], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.den) for v in self.nums)

    def __bool__(self) -> bool:
        return any(self.nums)

    def is_rational(self) -> Fraction | None:
        """The rational value when all higher coordinates vanish, else None."""
        if any(self.nums[1:]):
            return None
        return Fraction(self.nums[0], self.den)

    def _pair(self, other) -> tuple[CycloNum, CycloNum] | None:
        if isinstance(other, CycloNum):
            if other.level == self.level:
                return self, other
            r = other.is_rational()
            if r is not None:
                return self, CycloNum.of(self.level, r)
            rs = self.is_rational()
            if rs is not None:
                return CycloNum.of(other.level, rs), other
            raise ValueError("cross-level cyclotomic arithmetic")
        if isinstance(other, (int, Fraction)):
            return self, CycloNum.of(self.level, other)
        return None

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        nums = _K.vec_lincomb(a.nums, b.nums, b.den, a.den)
        return CycloNum(a.level, nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum(self.level, _K.vec_scale(self.nums, -1), self.den)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        nums = _K.vec_lincomb(a.nums, b.nums, b.den, -a.den)
        return CycloNum(a.level, nums, a.den * b.den)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        d = cyclotomic_poly(a.level).degree
        prod = _K.conv(a.nums, b.nums)
        nums = _K.reduce_cyclo(prod, _reduction_rows(a.level), d)
        return CycloNum(a.level, nums, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * cyclo_inv(b)

    def __rtruediv__(self, other):
        return cyclo_inv(self).__mul__(other)

    def __pow__(self, k: int) -> CycloNum:
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = cyclo_inv(base)
            k = -k
        out = CycloNum.of(self.level, 1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> CycloNum:
        return cyclo_inv(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            if other.level == self.level:
                return self.nums == other.nums and self.den == other.den
            a, b = self.is_rational(), other.is_rational()
            return a is not None and a == b
        if isinstance(other, (int, Fraction)):
            return self.is_rational() == Fraction(other)
        return NotImplemented

    def __hash__(self) -> int:
        r = self.is_rational()
        if r is not None:
            return hash(r)
        return hash((self.level, self.nums, self.den))

    def to_json(self) -> dict:
        return {"level": self.level, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> CycloNum:
        level = obj["level"]
        coeffs = [parse_rational(c) for c in obj["coeffs"]]
        if not isinstance(level, int) or level < 1:
            raise ValueError(f"bad cyclotomic level: {level!r}")
        if len(coeffs) != euler_phi(level):
            raise ValueError(
                f"level {level} needs {euler_phi(level)} coefficients, got {len(coeffs)}"
            )
        return cls.from_coeffs(level, coeffs)

    def canonical_str(self) -> str:
        r = self.is_rational()
        if r is not None:
            return format_rational(r)
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    def __repr__(self) -> str:
        return f"CycloNum({self.canonical_str()})"


@lru_cache(maxsize=None)
def zeta_pow(n: int, k: int) -> CycloNum:
    """zeta_n^(k mod n) as a reduced level-n element."""
    k %= n
    d = cyclotomic_poly(n).degree
    if k == 0:
        return CycloNum.of(n, 1)
    if k < d:
        return CycloNum(n, [0] * k + [1] + [0] * (d - k - 1))
    base = CycloNum(n, _K.reduce_cyclo([0, 1], _reduction_rows(n), d))
    return base**k


def is_rational(a: CycloNum) -> Fraction | None:
    return a.is_rational()


def _frac_poly_divmod(num: list[Fraction], den: list[Fraction]):
    rem = list(num)
    db = len(den) - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [Fraction(0)] * max(len(rem) - db, 0)
    inv_lead = 1 / den[-1]
    for top in range(len(rem) - 1, db - 1, -1):
        c = rem[top]
        if not c:
            continue
        f = c * inv_lead
        quo[top - db] = f
        for j, bv in enumerate(den):
            rem[top - db + j] -= f * bv
    while rem and not rem[-1]:
        rem.pop()
    return quo, rem


@lru_cache(maxsize=None)
def cyclo_inv(a: CycloNum) -> CycloNum:
    """Inverse via extended Euclid against Phi_n over the rationals."""
    if not a:
        raise ZeroDivisionError("inverse of zero cyclotomic element")
    r = a.is_rational()
    if r is not None:
        return CycloNum.of(a.level, 1 / r)
    # gcd(a, Phi_n) is a nonzero constant; track the Bezout factor of a only
    r0 = [c for c in a.coeffs]
    while r0 and not r0[-1]:
        r0.pop()
    s0 = [Fraction(1)]
    r1 = [Fraction(c) for c in cyclotomic_poly(a.level).coeffs]
    s1: list[Fraction] = []
    while r1:
        quo, rem = _frac_poly_divmod(r0, r1)
        # s_next = s0 - quo * s1
        prod = [Fraction(0)] * (len(quo) + len(s1) - 1) if quo and s1 else []
        for i, qv in enumerate(quo):
            if not qv:
                continue
            for j, sv in enumerate(s1):
                prod[i + j] += qv * sv
        s_next = [
            (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0)
            for i in range(max(len(s0), len(prod)))
        ]
        r0, s0, r1, s1 = r1, s1, rem, s_next
    g = r0
    if len(g) != 1:
        raise ArithmeticError("reduction modulus is not squarefree at this element")
    scale = 1 / g[0]
    d = cyclotomic_poly(a.level).degree
    s = list(s0)
    while s and not s[-1]:
        s.pop()
    if len(s) > d:
        raise ArithmeticError("Bezout factor exceeds field degree")
    coeffs = [(s[i] if i < len(s) else Fraction(0)) * scale for i in range(d)]
    return CycloNum.from_coeffs(a.level, coeffs)


def embed_complex(a: CycloNum, precision: int = 53) -> mpmath.mpc:
    """Numerical value under zeta_n -> e^(2 pi i / n) at the given precision."""
    if precision < 53:
        raise ValueError("precision below 53 bits")
    with mpmath.workprec(precision):
        z = mpmath.mpc(0)
        for j, v in enumerate(a.nums):
            if v:
                z += v * mpmath.expjpi(mpmath.mpf(2 * j) / a.level)
        return z / a.den


def normalize_scalar(x):
    """int -> Fraction; rational-valued CycloNum -> Fraction; else unchanged.

    Cache keys and branch tests (lambda == 1, lambda == gamma) rely on this
    collapsing every rational to one canonical type.
    """
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, CycloNum):
        r = x.is_rational()
        return r if r is not None else x
    return x


def rational_poly(poly):
    """QPoly with every coefficient rational -> same poly over Fraction, else None."""
    out = []
    for c in poly.coeffs:
        r = normalize_scalar(c)
        if isinstance(r, CycloNum):
            return None
        out.append(r)
    return type(poly)(out)
