"""Dense univariate polynomials in q over an exact scalar ring.

Scalars are fractions.Fraction (or int) and anything that quacks like the
cyclotomic numbers in this package: supports ring arithmetic, equality with
rationals, bool, plus ``inverse()``, ``is_rational()`` and
``canonical_str()``.  QPoly itself never imports the cyclotomic module, so
the two layers stay independent.

Canonical form: coefficient tuple with the leading entry nonzero; the zero
polynomial is the empty tuple and its degree is None, never -1.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import NotDivisible
from .scalars import format_rational, scalar_inv

_SUPERSCRIPT = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class QPoly:
    """Polynomial in q, immutable, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def zero(cls) -> QPoly:
        return cls()

    @classmethod
    def one(cls) -> QPoly:
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, k: int, c=1) -> QPoly:
        """c * q**k."""
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        # scalar comparison: constant (or zero) polynomial only
        if len(self.coeffs) > 1:
            return False
        return (self.coeffs[0] if self.coeffs else 0) == other

    def __hash__(self) -> int:
        return hash(("QPoly", self.coeffs))

    def __add__(self, other) -> QPoly:
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(tuple(-v for v in self.coeffs))

    def __sub__(self, other) -> QPoly:
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return (-self) + other

    def __mul__(self, other) -> QPoly:
        if not isinstance(other, QPoly):
            if not other:
                return QPoly()
            return QPoly(tuple(v * other for v in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return QPoly(out)

    def __rmul__(self, other) -> QPoly:
        return self.__mul__(other)

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = QPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divexact(self, other: QPoly) -> QPoly:
        """Exact quotient self / other; NotDivisible on a nonzero remainder."""
        if not isinstance(other, QPoly):
            other = QPoly((other,))
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        if not self:
            return QPoly()
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead_inv = scalar_inv(other.coeffs[-1])
        if len(rem) - 1 < db:
            raise NotDivisible("degree of dividend is below the divisor")
        qout = [0] * (len(rem) - db)
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if not c:
                continue
            f = c * lead_inv
            qout[top - db] = f
            for j, bv in enumerate(other.coeffs):
                rem[top - db + j] = rem[top - db + j] - f * bv
        if any(rem):
            raise NotDivisible("nonzero remainder in exact division")
        return QPoly(qout)

    def shift(self, c) -> QPoly:
        """f(q + c), exactly, by Horner composition with (q + c)."""
        step = QPoly((c, 1))
        out = QPoly()
        for coeff in reversed(self.coeffs):
            out = out * step + coeff
        return out

    def scale_arg(self, c) -> QPoly:
        """f(c*q): coefficient of q^i picks up a factor c^i."""
        out = []
        factor = 1
        for i, v in enumerate(self.coeffs):
            if i:
                factor = factor * c
            out.append(v * factor)
        return QPoly(out)

    def eval_at(self, x):
        """Horner evaluation at a scalar."""
        acc = 0
        for coeff in reversed(self.coeffs):
            acc = acc * x + coeff
        return acc

    def derivative(self) -> QPoly:
        return QPoly(tuple(i * v for i, v in enumerate(self.coeffs) if i))

    def to_str(self, unicode_sup: bool = False) -> str:
        """Canonical text: terms in decreasing degree, "q^2 - q + 1/6" style."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign, mag, fenced = _signed_parts(c)
            if k == 0:
                body = mag
            else:
                var = "q" if k == 1 else ("q" + str(k).translate(_SUPERSCRIPT) if unicode_sup else f"q^{k}")
                if mag == "1":
                    body = var
                elif fenced:
                    body = f"({mag}){var}"
                else:
                    body = f"{mag}{var}"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(("+ " if sign == "+" else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({self.to_str()!r})"


def _signed_parts(c) -> tuple[str, str, bool]:
    """(sign, magnitude text, needs parentheses before q^k)."""
    if isinstance(c, (int, Fraction)):
        rat = Fraction(c)
    else:
        rat = c.is_rational()
        if rat is None:
            return "+", c.canonical_str(), True
    sign = "-" if rat < 0 else "+"
    mag = -rat if rat < 0 else rat
    return sign, format_rational(mag), mag.denominator != 1


q = QPoly((0, 1))


def geometric_block(n: int, d: int) -> QPoly:
    """(q^n - 1) / (q^d - 1) for d | n, built by exact division."""
    top = QPoly((-1,) + (0,) * (n - 1) + (1,))
    bot = QPoly((-1,) + (0,) * (d - 1) + (1,))
    return top.divexact(bot)
