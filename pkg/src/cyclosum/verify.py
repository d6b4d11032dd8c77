"""Theorem-checkers for the package's identities, plus the grid campaign
runner and report serialization.

Every checker builds both sides of one identity through independent code
paths and compares canonical forms exactly; a pass is an algebraic
equality, never a tolerance check.  Parameter collisions (lambda hitting a
root of unity that the sum divides by) are recorded as skipped, anything
else that disagrees is a failure.

Campaigns are deterministic: random sequences are derived from the grid
seed alone, cases are sorted by parameter key before reporting, and report
bytes carry no timestamps, so two runs with the same seed are
byte-identical.
"""
from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .appell import apostol_bernoulli, apostol_bernoulli_number
from .arith import divisors, euler_phi, moebius, totatives
from .cyclotomic import CycloNum, normalize_scalar
from .dedekind import e_sum, g_series_oracle, v_sum
from .errors import InvalidGrid, InvalidParam, ParameterCollision
from .qpoly import QPoly, geometric_block, q
from .scalars import format_rational, parse_rational
from .series import TruncSeries
from .spectra import (
    PeriodicSeq,
    dft_inverse,
    family,
    interp_poly,
    lagrange_oracle,
    load_sequence,
    parse_family,
)

DEFAULT_SEED = 1009

IDENTITIES = ("prop1", "prop2", "mult", "section4", "moebius", "gseries")


def _scalar_label(x) -> str:
    x = normalize_scalar(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    return x.canonical_str()


@dataclass
class IdentityCase:
    identity: str
    params: dict
    status: str  # pass | fail | skipped
    reason: str | None = None
    lhs: str | None = None
    rhs: str | None = None

    def to_json(self) -> dict:
        out = {"identity": self.identity, "params": self.params, "status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        return out

    def sort_key(self) -> tuple:
        # ints ordered numerically, strings lexically, per sorted param name
        parts = tuple(
            (k, 0, v, "") if isinstance(v, int) else (k, 1, 0, str(v))
            for k, v in sorted(self.params.items())
        )
        return (self.identity, parts)


def _compare(identity: str, params: dict, lhs: QPoly, rhs: QPoly) -> IdentityCase:
    if lhs == rhs:
        return IdentityCase(identity, params, "pass")
    return IdentityCase(identity, params, "fail", lhs=lhs.to_str(), rhs=rhs.to_str())


def check_prop1(c_seq: PeriodicSeq, r: int, seq_desc: str = "custom", perturb: bool = False) -> IdentityCase:
    """Spectrum path vs Lagrange path for the interpolation polynomial."""
    params = {"n": c_seq.n, "r": r, "seq": seq_desc}
    lhs = interp_poly(dft_inverse(c_seq), r)
    rhs = lagrange_oracle(c_seq, r)
    if perturb:
        rhs = rhs + 1
    return _compare("prop1", params, lhs, rhs)


@lru_cache(maxsize=None)
def _shifted_bernoulli(m: int, lam_n, j: int, n: int) -> QPoly:
    return apostol_bernoulli(m, lam_n).shift(Fraction(j, n))


def check_prop2(
    m: int, n: int, r: int, p: int, lam, c_seq: PeriodicSeq, seq_desc: str = "custom", perturb: bool = False
) -> IdentityCase:
    """(-1)^(p-1) m E(nq) against C_0 B_m(nq) - n^m sum_j K_{j-r-p+1} lam^j B_m(q+j/n, lam^n)."""
    params = {
        "m": m, "n": n, "r": r, "p": p,
        "lambda": _scalar_label(lam), "seq": seq_desc,
    }
    try:
        e = e_sum(m, n, r, p, lam, c_seq)
    except ParameterCollision as exc:
        return IdentityCase("prop2", params, "skipped", reason=str(exc))
    lam = normalize_scalar(lam)
    sign = 1 if p % 2 else -1  # (-1)^(p-1)
    lhs = (sign * m) * e.scale_arg(n)
    kseq = dft_inverse(c_seq)
    lam_n = lam**n
    acc = QPoly.zero()
    for j in range(n):
        w = kseq[j - r - p + 1] * lam**j
        if w:
            acc = acc + _shifted_bernoulli(m, lam_n, j, n) * w
    rhs = c_seq[0] * apostol_bernoulli(m, lam).scale_arg(n) - n**m * acc
    if perturb:
        rhs = rhs + 1
    return _compare("prop2", params, lhs, rhs)


def check_mult_formula(m: int, n: int, lam, perturb: bool = False) -> IdentityCase:
    """B_m(nq, lam) = n^(m-1) sum_j lam^j B_m(q + j/n, lam^n)."""
    params = {"m": m, "n": n, "lambda": _scalar_label(lam)}
    lam = normalize_scalar(lam)
    lhs = apostol_bernoulli(m, lam).scale_arg(n)
    lam_n = lam**n
    acc = QPoly.zero()
    for j in range(n):
        w = lam**j
        if w:
            acc = acc + _shifted_bernoulli(m, lam_n, j, n) * w
    rhs = Fraction(n) ** (m - 1) * acc
    if perturb:
        rhs = rhs + 1
    return _compare("mult", params, lhs, rhs)


def check_section4_closed_form(m: int, n: int, r: int, p: int, lam, perturb: bool = False) -> IdentityCase:
    """The r+p=1 specialization with ramanujan weights, assembled from
    Bernoulli numbers and totative power sums on the right side."""
    if r + p != 1:
        raise ValueError("closed form requires r + p = 1")
    params = {
        "m": m, "n": n, "r": r, "p": p,
        "lambda": _scalar_label(lam), "seq": "ramanujan",
    }
    c_seq = family("ramanujan", n)
    try:
        e = e_sum(m, n, r, p, lam, c_seq)
    except ParameterCollision as exc:
        return IdentityCase("section4", params, "skipped", reason=str(exc))
    lam = normalize_scalar(lam)
    sign = 1 if p % 2 else -1
    lhs = (sign * m) * e.scale_arg(n)
    lam_n = lam**n
    rhs = euler_phi(n) * apostol_bernoulli(m, lam).scale_arg(n)
    for i in range(m + 1):
        b_i = apostol_bernoulli_number(i, lam_n)
        if not b_i:
            continue
        for k in range(m - i + 1):
            coeff = Fraction(
                n ** (m - k) * factorial(m),
                factorial(i) * factorial(k) * factorial(m - i - k),
            )
            w = coeff * b_i * v_sum(n, k, lam)
            if w:
                rhs = rhs - QPoly.monomial(m - i - k, w)
    if perturb:
        rhs = rhs + 1
    return _compare("section4", params, lhs, rhs)


def check_moebius_interp(n: int, perturb: bool = False) -> IdentityCase:
    """The totative indicator polynomial four ways: direct, spectral, and
    the two divisor-sum forms built by exact division."""
    params = {"n": n}
    coeffs = [0] * n
    for j in totatives(n):
        if j < n:
            coeffs[j] = 1
    direct = QPoly(coeffs)
    spectral = interp_poly(dft_inverse(family("ramanujan", n)), 0)
    f1 = QPoly.zero()
    f2 = QPoly.zero()
    for d in divisors(n):
        mu = moebius(d)
        if not mu:
            continue
        block = geometric_block(n, d)
        f1 = f1 + mu * block
        f2 = f2 + mu * (block * QPoly.monomial(d, 1))
    if perturb:
        f1 = f1 + 1
    for label, other in (("spectral", spectral), ("divisor-sum", f1), ("divisor-sum-shifted", f2)):
        if direct != other:
            return IdentityCase(
                "moebius", params, "fail",
                reason=f"{label} form disagrees with the totative indicator",
                lhs=direct.to_str(), rhs=other.to_str(),
            )
    return IdentityCase("moebius", params, "pass")


def _t_over_exp_affine(lam, s: int, order: int) -> TruncSeries:
    """t / (lam e^{st} - 1).  For lam = 1 the constant term of the
    denominator vanishes, so divide t through before inverting."""
    lam = normalize_scalar(lam)
    if lam == 1:
        den = TruncSeries(
            [Fraction(s ** (k + 1), k + 1) for k in range(order + 1)], order
        )
        return den.inverse()
    den = TruncSeries([lam - 1] + [lam * Fraction(s) ** k for k in range(1, order + 1)], order)
    return den.inverse().mul_t()


def check_gseries_chain(
    n: int, r: int, p: int, lam, c_seq: PeriodicSeq, order: int, seq_desc: str = "custom", perturb: bool = False
) -> IdentityCase:
    """The generating-series identity chain, modulo t^(order+1).

    Three layers in one case: the series identity tying C_0/(lam e^t - 1),
    the G series and the K-weighted right side together; the G coefficients
    against e_sum at shifted index; and the t-shifted chain coefficients
    against m times e_sum at nq.
    """
    if order < 1:
        raise ValueError("series order must be >= 1")
    params = {
        "n": n, "r": r, "p": p,
        "lambda": _scalar_label(lam), "seq": seq_desc, "T": order,
    }
    try:
        g = g_series_oracle(n, r, p, lam, c_seq, order)
    except ParameterCollision as exc:
        return IdentityCase("gseries", params, "skipped", reason=str(exc))
    lam = normalize_scalar(lam)
    sign_p = -1 if p % 2 else 1  # (-1)^p
    nq = QPoly((0, n))
    tg = (g * TruncSeries.exp_linear(QPoly((0, n - 1)), order)).mul_t()
    lhs = c_seq[0] * (_t_over_exp_affine(lam, 1, order) * TruncSeries.exp_linear(nq, order)) + sign_p * tg
    kseq = dft_inverse(c_seq)
    base = _t_over_exp_affine(lam**n, n, order)
    acc = TruncSeries.zero(order)
    for j in range(n):
        w = kseq[j - r - p + 1] * lam**j
        if w:
            acc = acc + TruncSeries.exp_linear(QPoly((j, n)), order) * w
    rhs = (acc * base) * n
    if perturb:
        rhs = rhs + TruncSeries.one(order)
    for m in range(order + 1):
        if lhs[m] != rhs[m]:
            return IdentityCase(
                "gseries", params, "fail",
                reason=f"series sides differ at coefficient {m}",
                lhs=lhs[m].to_str(), rhs=rhs[m].to_str(),
            )
    for m in range(order + 1):
        expected = e_sum(m + 1, n, r, p, lam, c_seq)
        if g[m] != expected:
            return IdentityCase(
                "gseries", params, "fail",
                reason=f"G coefficient {m} differs from the index-{m + 1} sum",
                lhs=g[m].to_str(), rhs=expected.to_str(),
            )
    for m in range(1, order + 1):
        expected = m * e_sum(m, n, r, p, lam, c_seq).scale_arg(n)
        if tg[m] != expected:
            return IdentityCase(
                "gseries", params, "fail",
                reason=f"t-shifted chain coefficient {m} differs from m times the index-{m} sum",
                lhs=tg[m].to_str(), rhs=expected.to_str(),
            )
    return IdentityCase("gseries", params, "pass")


@dataclass
class GridSpec:
    """Cartesian parameter grid for one identity's campaign."""

    identity: str
    m: tuple[int, ...] = ()
    n: tuple[int, ...] = ()
    r: tuple[int, ...] = ()
    p: tuple[int, ...] = ()
    rp_pairs: tuple[tuple[int, int], ...] = ()
    lambdas: tuple = ()
    sequences: tuple[str, ...] = ()
    order: int = 8
    seed: int = DEFAULT_SEED
    perturb_index: int | None = None  # test-only mutation hook

    _REQUIRED = {
        "prop1": ("n", "r", "sequences"),
        "prop2": ("m", "n", "r", "p", "lambdas", "sequences"),
        "mult": ("m", "n", "lambdas"),
        "section4": ("m", "n", "rp_pairs", "lambdas"),
        "moebius": ("n",),
        "gseries": ("n", "r", "p", "lambdas", "sequences"),
    }

    def validate(self) -> None:
        if self.identity not in self._REQUIRED:
            raise InvalidGrid(f"unknown identity {self.identity!r}")
        for axis in self._REQUIRED[self.identity]:
            if not getattr(self, axis):
                raise InvalidGrid(f"{self.identity} grid needs a nonempty {axis} axis")
        if self.identity == "section4" and any(r + p != 1 for r, p in self.rp_pairs):
            raise InvalidGrid("section4 grid requires r + p = 1 in every pair")
        if self.identity == "gseries" and self.order < 1:
            raise InvalidGrid("gseries grid needs order >= 1")

    @classmethod
    def from_json(cls, obj: dict, identity: str | None = None) -> GridSpec:
        if not isinstance(obj, dict):
            raise InvalidGrid("grid spec must be a JSON object")
        known = {
            "identity", "m", "n", "r", "p", "rp_pairs",
            "lambdas", "sequences", "T", "seed", "perturb_index",
        }
        unknown = set(obj) - known
        if unknown:
            raise InvalidGrid(f"unknown grid fields: {sorted(unknown)}")
        ident = obj.get("identity", identity)
        if ident is None:
            raise InvalidGrid("grid spec does not name an identity")
        if identity is not None and obj.get("identity") not in (None, identity):
            raise InvalidGrid(
                f"grid identity {obj['identity']!r} contradicts requested {identity!r}"
            )
        spec = cls(
            identity=ident,
            m=_int_axis(obj.get("m"), "m"),
            n=_int_axis(obj.get("n"), "n"),
            r=_int_axis(obj.get("r"), "r"),
            p=_int_axis(obj.get("p"), "p"),
            rp_pairs=_pair_axis(obj.get("rp_pairs")),
            lambdas=_lambda_axis(obj.get("lambdas")),
            sequences=_seq_axis(obj.get("sequences")),
            order=_order_field(obj.get("T", 8)),
            seed=_seed_field(obj.get("seed", DEFAULT_SEED)),
            perturb_index=obj.get("perturb_index"),
        )
        spec.validate()
        return spec

    def to_json(self) -> dict:
        out: dict = {"identity": self.identity, "seed": self.seed}
        for axis in ("m", "n", "r", "p"):
            vals = getattr(self, axis)
            if vals:
                out[axis] = list(vals)
        if self.rp_pairs:
            out["rp_pairs"] = [list(pair) for pair in self.rp_pairs]
        if self.lambdas:
            out["lambdas"] = [_scalar_label(v) for v in self.lambdas]
        if self.sequences:
            out["sequences"] = list(self.sequences)
        if self.identity == "gseries":
            out["T"] = self.order
        return out


def _int_axis(v, name: str) -> tuple[int, ...]:
    if v is None:
        return ()
    if isinstance(v, dict) and set(v) == {"min", "max"}:
        lo, hi = v["min"], v["max"]
        if not (isinstance(lo, int) and isinstance(hi, int) and lo <= hi):
            raise InvalidGrid(f"bad range for axis {name}: {v!r}")
        return tuple(range(lo, hi + 1))
    if isinstance(v, list) and v and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        return tuple(v)
    raise InvalidGrid(f"axis {name} must be a nonempty integer list or a min/max range")


def _pair_axis(v) -> tuple[tuple[int, int], ...]:
    if v is None:
        return ()
    if isinstance(v, list) and all(
        isinstance(x, list) and len(x) == 2 and all(isinstance(y, int) for y in x) for x in v
    ):
        return tuple((x[0], x[1]) for x in v)
    raise InvalidGrid("rp_pairs must be a list of [r, p] integer pairs")


def _lambda_axis(v) -> tuple:
    if v is None:
        return ()
    if not isinstance(v, list):
        raise InvalidGrid("lambdas must be a list")
    out = []
    for item in v:
        try:
            if isinstance(item, str):
                out.append(parse_rational(item))
            elif isinstance(item, int) and not isinstance(item, bool):
                out.append(Fraction(item))
            elif isinstance(item, dict):
                out.append(CycloNum.from_json(item))
            else:
                raise ValueError(f"unsupported lambda {item!r}")
        except ValueError as exc:
            raise InvalidGrid(f"bad lambda entry: {exc}") from exc
    return tuple(out)


def _seq_axis(v) -> tuple[str, ...]:
    if v is None:
        return ()
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        return tuple(v)
    raise InvalidGrid("sequences must be a list of descriptor strings")


def _order_field(v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InvalidGrid(f"bad T: {v!r}")
    return v


def _seed_field(v) -> int:
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidGrid(f"bad seed: {v!r}")
    return v


def random_sequence(n: int, seed: int, index: int) -> PeriodicSeq:
    """The index-th seeded random rational sequence of period n.  Entirely
    determined by (seed, index, n), independent of draw order elsewhere."""
    rng = random.Random(f"{seed}:random-{index}:{n}")
    vals = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
    return PeriodicSeq(n, vals)


def resolve_sequences(
    descs: tuple[str, ...], n: int, seed: int, identity: str = ""
) -> list[tuple[str, PeriodicSeq]]:
    """Expand descriptors into (label, sequence) pairs at period n."""
    out: list[tuple[str, PeriodicSeq]] = []
    for desc in descs:
        if desc.startswith("random:"):
            count = int(desc.split(":", 1)[1])
            for i in range(1, count + 1):
                out.append((f"random-{i}", random_sequence(n, seed, i)))
        elif desc.startswith("random-"):
            out.append((desc, random_sequence(n, seed, int(desc.split("-", 1)[1]))))
        elif desc.startswith("file:"):
            out.append((desc, load_sequence(desc.split(":", 1)[1])))
        else:
            name, params = parse_family(desc)
            if (
                identity == "prop2"
                and name in ("fourier-dedekind", "apostol-dedekind")
                and "c0" not in params
            ):
                raise InvalidParam(
                    f"family {name} leaves C_0 unspecified, but prop2 reads C_0; "
                    f"append c0=... to the descriptor"
                )
            out.append((desc, family(name, n, **params)))
    return out


def _enumerate_jobs(spec: GridSpec):
    """Deterministic job list for the grid; each job is (checker kwargs)."""
    if spec.identity == "prop1":
        for n in spec.n:
            seqs = resolve_sequences(spec.sequences, n, spec.seed, spec.identity)
            for r in spec.r:
                for desc, c_seq in seqs:
                    yield {"c_seq": c_seq, "r": r, "seq_desc": desc}
    elif spec.identity == "prop2":
        for m in spec.m:
            for n in spec.n:
                seqs = resolve_sequences(spec.sequences, n, spec.seed, spec.identity)
                for r in spec.r:
                    for p in spec.p:
                        for lam in spec.lambdas:
                            for desc, c_seq in seqs:
                                yield {
                                    "m": m, "n": n, "r": r, "p": p,
                                    "lam": lam, "c_seq": c_seq, "seq_desc": desc,
                                }
    elif spec.identity == "mult":
        for m in spec.m:
            for n in spec.n:
                for lam in spec.lambdas:
                    yield {"m": m, "n": n, "lam": lam}
    elif spec.identity == "section4":
        for m in spec.m:
            for n in spec.n:
                for r, p in spec.rp_pairs:
                    for lam in spec.lambdas:
                        yield {"m": m, "n": n, "r": r, "p": p, "lam": lam}
    elif spec.identity == "moebius":
        for n in spec.n:
            yield {"n": n}
    elif spec.identity == "gseries":
        for n in spec.n:
            seqs = resolve_sequences(spec.sequences, n, spec.seed, spec.identity)
            for r in spec.r:
                for p in spec.p:
                    for lam in spec.lambdas:
                        for desc, c_seq in seqs:
                            yield {
                                "n": n, "r": r, "p": p, "lam": lam,
                                "c_seq": c_seq, "order": spec.order, "seq_desc": desc,
                            }
    else:  # pragma: no cover - validate() rejects this earlier
        raise InvalidGrid(f"unknown identity {spec.identity!r}")


_CHECKERS = {
    "prop1": check_prop1,
    "prop2": check_prop2,
    "mult": check_mult_formula,
    "section4": check_section4_closed_form,
    "moebius": check_moebius_interp,
    "gseries": check_gseries_chain,
}


def _run_job(job: tuple[str, dict]) -> IdentityCase:
    identity, kwargs = job
    return _CHECKERS[identity](**kwargs)


def run_grid(spec: GridSpec, workers: int = 1) -> list[IdentityCase]:
    """All cases of the grid, sorted by parameter key.

    Execution order never shows in the output: results are keyed and sorted
    by (identity, params), so serial and parallel runs agree byte for byte.
    """
    spec.validate()
    jobs = [(spec.identity, kwargs) for kwargs in _enumerate_jobs(spec)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(jobs) // (workers * 4))
            cases = list(pool.map(_run_job, jobs, chunksize=chunk))
    else:
        cases = [_run_job(job) for job in jobs]
    cases.sort(key=IdentityCase.sort_key)
    if spec.perturb_index is not None and 0 <= spec.perturb_index < len(jobs):
        identity, kwargs = jobs[spec.perturb_index]
        mutated = _CHECKERS[identity](**kwargs, perturb=True)
        key = mutated.sort_key()
        for i, case in enumerate(cases):
            if case.sort_key() == key:
                cases[i] = mutated
                break
    return cases


def default_grid(identity: str, seed: int = DEFAULT_SEED) -> GridSpec:
    """The acceptance-scale grid for one identity."""
    if identity == "prop1":
        return GridSpec(
            identity, n=tuple(range(2, 9)), r=tuple(range(-2, 6)),
            sequences=("random:50",), seed=seed,
        )
    if identity == "prop2":
        return GridSpec(
            identity,
            m=tuple(range(1, 7)), n=tuple(range(2, 9)),
            r=tuple(range(0, 4)), p=(-1, 0, 1, 2),
            lambdas=(Fraction(1), Fraction(2), Fraction(-1, 2), Fraction(3), Fraction(5, 7)),
            sequences=("delta", "ramanujan", "random:3"), seed=seed,
        )
    if identity == "mult":
        return GridSpec(
            identity, m=tuple(range(1, 7)), n=tuple(range(2, 9)),
            lambdas=(Fraction(1), Fraction(2), Fraction(-1, 2)), seed=seed,
        )
    if identity == "section4":
        return GridSpec(
            identity, m=tuple(range(1, 6)), n=(2, 3, 4, 6),
            rp_pairs=((1, 0), (0, 1), (-1, 2)),
            lambdas=(Fraction(2), Fraction(-1, 2)), seed=seed,
        )
    if identity == "moebius":
        return GridSpec(identity, n=tuple(range(2, 13)), seed=seed)
    if identity == "gseries":
        return GridSpec(
            identity, n=(2, 3, 4, 6), r=(0, 2), p=(-1, 0, 1, 2),
            lambdas=(Fraction(1), Fraction(2), Fraction(-1, 2)),
            sequences=("random:1",), order=8, seed=seed,
        )
    raise InvalidGrid(f"unknown identity {identity!r}")


def build_report(campaign: str, cases: list[IdentityCase], grids: list[GridSpec]) -> dict:
    summary = {"pass": 0, "fail": 0, "skipped": 0}
    for case in cases:
        summary[case.status] += 1
    return {
        "campaign": campaign,
        "grid": [spec.to_json() for spec in grids],
        "cases": [case.to_json() for case in cases],
        "summary": summary,
    }


def report_json_bytes(report: dict) -> bytes:
    return (json.dumps(report, sort_keys=True, indent=2) + "\n").encode()

_CSV_COLUMNS = (
    "identity", "m", "n", "r", "p", "lambda", "seq", "T",
    "status", "reason", "lhs", "rhs",
)


def report_csv_bytes(report: dict) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for case in report["cases"]:
        row = []
        for col in _CSV_COLUMNS:
            if col == "identity":
                row.append(case["identity"])
            elif col in ("status", "reason", "lhs", "rhs"):
                row.append(case.get(col, ""))
            else:
                row.append(case["params"].get(col, ""))
        writer.writerow(row)
    return buf.getvalue().encode()
