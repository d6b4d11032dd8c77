"""n-periodic sequences over Q(zeta_n), their exact DFT pair, built-in
weight families, and the interpolation polynomial attached to a shifted
spectrum, with the Lagrange construction as an independent second path.

Indexing is always mod n with nonnegative representative, so C[-k] and
K[j - r - p + 1] mean exactly what the summation formulas want.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import gcd
from pathlib import Path

from .arith import totatives
from .cyclotomic import CycloNum, cyclo_inv, zeta_pow
from .errors import InvalidParam, SequenceFileError
from .qpoly import QPoly
from .scalars import parse_rational


class _Cycle:
    """Shared machinery of PeriodicSeq and SpectralSeq: n values at level n,
    indexed modulo n."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        if n < 2:
            raise ValueError("period must be >= 2")
        vals = tuple(CycloNum.of(n, v) for v in values)
        if len(vals) != n:
            raise ValueError(f"period {n} needs {n} values, got {len(vals)}")
        self.n = n
        self.values = vals

    def __getitem__(self, k: int) -> CycloNum:
        return self.values[k % self.n]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.n == other.n and self.values == other.values

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.n, self.values))

    def to_json(self) -> dict:
        vals = []
        for v in self.values:
            r = v.is_rational()
            vals.append(_fmt_rat(r) if r is not None else v.to_json())
        return {"n": self.n, "values": vals}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.n}, {[v.canonical_str() for v in self.values]})"


def _fmt_rat(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


class PeriodicSeq(_Cycle):
    """The sequence C = {C_k}, periodically extended."""


class SpectralSeq(_Cycle):
    """The spectrum K = {K_j} of a periodic sequence."""


def dft_forward(k_seq: SpectralSeq) -> PeriodicSeq:
    """C_k = sum_j K_j zeta_n^{kj}."""
    n = k_seq.n
    out = []
    for k in range(n):
        acc = CycloNum.of(n, 0)
        for j in range(n):
            acc = acc + k_seq[j] * zeta_pow(n, k * j)
        out.append(acc)
    return PeriodicSeq(n, out)


def dft_inverse(c_seq: PeriodicSeq) -> SpectralSeq:
    """K_j = (1/n) sum_k C_k zeta_n^{-kj}; exact inverse of dft_forward."""
    n = c_seq.n
    w = Fraction(1, n)
    out = []
    for j in range(n):
        acc = CycloNum.of(n, 0)
        for k in range(n):
            acc = acc + c_seq[k] * zeta_pow(n, -k * j)
        out.append(acc * w)
    return SpectralSeq(n, out)


def family(name: str, n: int, a: int | None = None, c0=None) -> PeriodicSeq:
    """Built-in weight sequences.

    delta: (n, 0, ..., 0).  ramanujan: C_k = sum over totatives j of
    zeta_n^{kj}.  fourier-dedekind: C_k = 1/(1 - zeta_n^{-ak}) for k != 0;
    apostol-dedekind the same with +ak.  Both need gcd(a, n) = 1 and leave
    C_0 unspecified, so it defaults to 0 unless c0 is given.
    """
    if name == "delta":
        return PeriodicSeq(n, [n] + [0] * (n - 1))
    if name == "ramanujan":
        out = []
        for k in range(n):
            acc = CycloNum.of(n, 0)
            for j in totatives(n):
                acc = acc + zeta_pow(n, k * j)
            out.append(acc)
        return PeriodicSeq(n, out)
    if name in ("fourier-dedekind", "apostol-dedekind"):
        if a is None:
            raise InvalidParam(f"family {name} needs parameter a")
        if gcd(a, n) != 1:
            raise InvalidParam(
                f"family {name} needs gcd(a, n) = 1, got gcd({a}, {n}) = {gcd(a, n)}"
            )
        sign = -1 if name == "fourier-dedekind" else 1
        vals = [c0 if c0 is not None else 0]
        for k in range(1, n):
            vals.append(cyclo_inv(1 - zeta_pow(n, sign * a * k)))
        return PeriodicSeq(n, vals)
    raise InvalidParam(f"unknown sequence family {name!r}")


def parse_family(text: str) -> tuple[str, dict]:
    """Parse a shorthand like "ramanujan" or "fourier-dedekind:a=3,c0=1/2"."""
    name, _, tail = text.partition(":")
    params: dict = {}
    if tail:
        for item in tail.split(","):
            key, sep, value = item.partition("=")
            if not sep or key not in ("a", "c0"):
                raise InvalidParam(f"bad family parameter {item!r} in {text!r}")
            params[key] = int(value) if key == "a" else parse_rational(value)
    if name not in ("delta", "ramanujan", "fourier-dedekind", "apostol-dedekind"):
        raise InvalidParam(f"unknown sequence family {name!r}")
    return name, params


def interp_poly(k_seq: SpectralSeq, r: int) -> QPoly:
    """The polynomial with coefficient of q^j equal to K_{(j-r) mod n}."""
    return QPoly(tuple(k_seq[j - r] for j in range(k_seq.n)))


@lru_cache(maxsize=None)
def _lagrange_basis(n: int) -> tuple[QPoly, ...]:
    # basis polynomial k is 1 at zeta_n^{-k} and 0 at the other nodes
    nodes = [zeta_pow(n, -k) for k in range(n)]
    out = []
    for k in range(n):
        num = QPoly.one()
        den = CycloNum.of(n, 1)
        for l in range(n):
            if l == k:
                continue
            num = num * QPoly((-nodes[l], 1))
            den = den * (nodes[k] - nodes[l])
        out.append(num * cyclo_inv(den))
    return tuple(out)


def lagrange_oracle(c_seq: PeriodicSeq, r: int) -> QPoly:
    """Interpolate the values zeta_n^{-kr} C_{-k} at the nodes zeta_n^{-k}.

    Independent second path to interp_poly(dft_inverse(C), r); the equality
    of the two is the interpolation proposition itself.
    """
    n = c_seq.n
    acc = QPoly.zero()
    for k, basis in enumerate(_lagrange_basis(n)):
        w = zeta_pow(n, -k * r) * c_seq[-k]
        if w:
            acc = acc + basis * w
    return acc


def sequence_from_json(obj) -> PeriodicSeq:
    """Decode {"n": int, "values": [...]} with "a/b" or cyclonum entries."""
    try:
        n = obj["n"]
        raw = obj["values"]
    except (TypeError, KeyError) as exc:
        raise SequenceFileError(f"sequence object needs n and values: {exc}") from exc
    if not isinstance(n, int) or n < 2:
        raise SequenceFileError(f"bad period: {n!r}")
    if not isinstance(raw, list) or len(raw) != n:
        raise SequenceFileError(f"period {n} needs exactly {n} values")
    vals = []
    for item in raw:
        try:
            if isinstance(item, str):
                vals.append(parse_rational(item))
            elif isinstance(item, int):
                vals.append(Fraction(item))
            elif isinstance(item, dict):
                vals.append(CycloNum.from_json(item))
            else:
                raise ValueError(f"unsupported value {item!r}")
        except ValueError as exc:
            raise SequenceFileError(f"bad sequence value: {exc}") from exc
    try:
        return PeriodicSeq(n, vals)
    except ValueError as exc:
        raise SequenceFileError(str(exc)) from exc


def load_sequence(path: str | Path) -> PeriodicSeq:
    """Read a sequence JSON file; all failures become SequenceFileError."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SequenceFileError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SequenceFileError(f"{path} is not valid JSON: {exc}") from exc
    return sequence_from_json(obj)
