"""Command-line surface: compute individual objects or run verification
campaigns.

Exit codes: 0 success, 1 identity failure in a campaign, 2 usage or grid
errors, 3 parameter collision, 4 input-file or sequence-family error.
Output is deterministic for fixed flags and seed; human format upgrades to
Unicode superscripts only when stdout can encode them, while json and csv
are the stable interfaces.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cyclotomic import CycloNum, normalize_scalar, zeta_pow
from .appell import apostol_bernoulli, frobenius_euler
from .dedekind import e_sum, ramanujan_sum, v_sum
from .errors import (
    InvalidGrid,
    InvalidParam,
    InvalidPower,
    ParameterCollision,
    SequenceFileError,
)
from .qpoly import QPoly
from .scalars import format_rational, parse_rational
from .spectra import dft_inverse, family, interp_poly, load_sequence, parse_family
from .verify import (
    DEFAULT_SEED,
    IDENTITIES,
    GridSpec,
    build_report,
    default_grid,
    report_csv_bytes,
    report_json_bytes,
    run_grid,
)

_FAMILY_NAMES = ("delta", "ramanujan", "fourier-dedekind", "apostol-dedekind")


@dataclass(frozen=True)
class CliConfig:
    """Shared plumbing extracted from parsed flags."""

    subcommand: str
    format: str
    out: str | None
    workers: int
    seed: int | None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CliConfig:
        return cls(
            subcommand=args.subcommand,
            format=getattr(args, "format", "human"),
            out=getattr(args, "out", None),
            workers=getattr(args, "workers", 1),
            seed=getattr(args, "seed", None),
        )


def _unicode_ok() -> bool:
    if not (hasattr(sys.stdout, "isatty") and sys.stdout.isatty()):
        return False
    enc = getattr(sys.stdout, "encoding", None) or ""
    try:
        "q²".encode(enc)
    except (LookupError, UnicodeEncodeError):
        return False
    return True


def _scalar_str(value) -> str:
    value = normalize_scalar(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    return value.canonical_str()


def _emit(cfg: CliConfig, fields: list[tuple[str, str]], human: str) -> None:
    """fields are (name, value) pairs in fixed order; human is the terse form."""
    if cfg.format == "json":
        print(json.dumps(dict(fields), sort_keys=True))
    elif cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in fields])
        writer.writerow([v for _, v in fields])
        sys.stdout.write(buf.getvalue())
    else:
        print(human)


def _parse_gamma(text: str):
    """gamma flag: "a/b", "zeta:n:k", or a cyclonum JSON object."""
    if text.startswith("zeta:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad zeta form {text!r}; expected zeta:n:k")
        return zeta_pow(int(parts[1]), int(parts[2]))
    if text.lstrip().startswith("{"):
        return CycloNum.from_json(json.loads(text))
    return parse_rational(text)


def _resolve_seq_arg(text: str, n: int):
    """--seq value: family shorthand, file:path, or a bare JSON path."""
    head = text.split(":", 1)[0]
    if head in _FAMILY_NAMES:
        name, params = parse_family(text)
        return family(name, n, **params)
    path = text.split(":", 1)[1] if head == "file" else text
    seq = load_sequence(path)
    if seq.n != n:
        raise SequenceFileError(f"sequence period {seq.n} differs from --n {n}")
    return seq


def _poly_out(cfg: CliConfig, poly: QPoly, fields: list[tuple[str, str]]) -> None:
    fields = fields + [("poly", poly.to_str())]
    _emit(cfg, fields, poly.to_str(unicode_sup=_unicode_ok()))


def cmd_poly(cfg: CliConfig, args: argparse.Namespace) -> int:
    lam = Fraction(1) if args.classical else parse_rational(args.lam)
    poly = apostol_bernoulli(args.m, lam)
    _poly_out(cfg, poly, [("m", str(args.m)), ("lambda", _scalar_str(lam))])
    return 0


def cmd_hpoly(cfg: CliConfig, args: argparse.Namespace) -> int:
    lam = parse_rational(args.lam)
    gamma = _parse_gamma(args.gamma)
    poly = frobenius_euler(args.m, args.p, lam, gamma)
    _poly_out(
        cfg,
        poly,
        [
            ("m", str(args.m)),
            ("p", str(args.p)),
            ("lambda", _scalar_str(lam)),
            ("gamma", _scalar_str(gamma)),
        ],
    )
    return 0


def cmd_esum(cfg: CliConfig, args: argparse.Namespace) -> int:
    lam = parse_rational(args.lam)
    c_seq = _resolve_seq_arg(args.seq, args.n)
    poly = e_sum(args.m, args.n, args.r, args.p, lam, c_seq)
    fields = [
        ("m", str(args.m)),
        ("n", str(args.n)),
        ("r", str(args.r)),
        ("p", str(args.p)),
        ("lambda", _scalar_str(lam)),
        ("seq", args.seq),
    ]
    if args.at is not None:
        value = poly.eval_at(parse_rational(args.at))
        text = _scalar_str(value)
        _emit(cfg, fields + [("at", args.at), ("value", text)], text)
    else:
        _poly_out(cfg, poly, fields)
    return 0


def cmd_vsum(cfg: CliConfig, args: argparse.Namespace) -> int:
    lam = parse_rational(args.lam)
    value = v_sum(args.n, args.k, lam)
    text = _scalar_str(value)
    _emit(
        cfg,
        [("n", str(args.n)), ("k", str(args.k)), ("lambda", _scalar_str(lam)), ("value", text)],
        text,
    )
    return 0


def cmd_ramanujan(cfg: CliConfig, args: argparse.Namespace) -> int:
    value = ramanujan_sum(args.n, args.k)
    text = format_rational(value)
    _emit(cfg, [("n", str(args.n)), ("k", str(args.k)), ("value", text)], text)
    return 0


def cmd_interp(cfg: CliConfig, args: argparse.Namespace) -> int:
    c_seq = _resolve_seq_arg(args.seq, args.n)
    poly = interp_poly(dft_inverse(c_seq), args.r)
    _poly_out(cfg, poly, [("n", str(args.n)), ("r", str(args.r)), ("seq", args.seq)])
    return 0


def _resolve_out(path_str: str) -> Path:
    path = Path(path_str)
    base = os.environ.get("CYCLOSUM_OUT")
    if base and not path.is_absolute():
        path = Path(base) / path
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    return path


def cmd_verify(cfg: CliConfig, args: argparse.Namespace) -> int:
    idents = IDENTITIES if args.identity == "all" else (args.identity,)
    if args.grid is not None and args.identity == "all":
        raise InvalidGrid("a grid file applies to one identity; pick one with --identity")
    grids = []
    for ident in idents:
        if args.grid is not None:
            try:
                obj = json.loads(Path(args.grid).read_text())
            except OSError as exc:
                raise InvalidGrid(f"cannot read grid file: {exc}") from exc
            except json.JSONDecodeError as exc:
                raise InvalidGrid(f"grid file is not valid JSON: {exc}") from exc
            spec = GridSpec.from_json(obj, identity=ident)
        else:
            spec = default_grid(ident)
        if cfg.seed is not None:
            spec.seed = cfg.seed
        grids.append(spec)
    cases = []
    for spec in grids:
        cases.extend(run_grid(spec, workers=cfg.workers))
    cases.sort(key=lambda c: c.sort_key())
    report = build_report(args.identity, cases, grids)
    data = report_csv_bytes(report) if cfg.format == "csv" else report_json_bytes(report)
    summary = report["summary"]
    if cfg.out is not None:
        out_path = _resolve_out(cfg.out)
        out_path.write_bytes(data)
        print(
            f"pass={summary['pass']} fail={summary['fail']} "
            f"skipped={summary['skipped']} report={out_path}"
        )
    else:
        sys.stdout.write(data.decode())
    return 1 if summary["fail"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclosum",
        description="Exact Dedekind-type sums over cyclotomic fields.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p: argparse.ArgumentParser, choices=("human", "json", "csv")) -> None:
        p.add_argument("--format", choices=choices, default=choices[0])

    p = sub.add_parser("poly", help="Apostol-Bernoulli polynomial B_m(q, lambda)")
    p.add_argument("--m", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--lambda", dest="lam", metavar="a/b")
    group.add_argument("--classical", action="store_true", help="shorthand for --lambda 1")
    add_format(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("hpoly", help="Frobenius-Euler polynomial H_m^(p)(q, lambda, gamma)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam", metavar="a/b", required=True)
    p.add_argument("--gamma", required=True, help='"a/b", "zeta:n:k", or cyclonum JSON')
    add_format(p)
    p.set_defaults(func=cmd_hpoly)

    p = sub.add_parser("esum", help="Dedekind-type sum as a polynomial in q")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam", metavar="a/b", required=True)
    p.add_argument("--seq", required=True, help="family shorthand or sequence JSON file")
    p.add_argument("--at", metavar="a/b", help="evaluate at a rational point")
    add_format(p)
    p.set_defaults(func=cmd_esum)

    p = sub.add_parser("vsum", help="totative power sum V_n^(k)(lambda)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", metavar="a/b", required=True)
    add_format(p)
    p.set_defaults(func=cmd_vsum)

    p = sub.add_parser("ramanujan", help="Ramanujan sum c_n(k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("interp", help="interpolation polynomial of a shifted spectrum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seq", required=True, help="family shorthand or sequence JSON file")
    add_format(p)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("verify", help="run an identity campaign and emit a report")
    p.add_argument("--identity", choices=IDENTITIES + ("all",), default="all")
    p.add_argument("--grid", help="grid spec JSON file (defaults per identity)")
    p.add_argument("--out", help="report path; relative paths land in $CYCLOSUM_OUT")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, help=f"campaign seed (default {DEFAULT_SEED})")
    add_format(p, choices=("json", "csv"))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CliConfig.from_args(args)
    try:
        return args.func(cfg, args)
    except ParameterCollision as exc:
        print(f"parameter collision: {exc}", file=sys.stderr)
        return 3
    except (SequenceFileError, InvalidParam) as exc:
        print(f"bad sequence input: {exc}", file=sys.stderr)
        return 4
    except InvalidGrid as exc:
        print(f"bad grid: {exc}", file=sys.stderr)
        return 2
    except (InvalidPower, ValueError, json.JSONDecodeError) as exc:
        print(f"bad arguments: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
