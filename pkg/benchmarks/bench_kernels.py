"""Compare the pure-Python and compiled kernel backends.

Times the raw vector primitives on synthetic data, then two cyclotomic-heavy
library workloads (polynomial coefficients living in Q(zeta_n), where every
product funnels through conv + reduce_cyclo).  Caches are cleared before
each run so both backends do the same work.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import random
import time

from cyclosum import _kernel
from cyclosum import appell, arith, cyclotomic, dedekind, spectra, verify
from cyclosum.cyclotomic import _reduction_rows
from cyclosum.spectra import family


def clear_caches() -> None:
    for mod in (appell, arith, cyclotomic, dedekind, spectra, verify):
        for name in dir(mod):
            obj = getattr(mod, name)
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


def bench_conv() -> None:
    rng = random.Random(11)
    a = [rng.randint(-10 ** 18, 10 ** 18) for _ in range(48)]
    b = [rng.randint(-10 ** 18, 10 ** 18) for _ in range(48)]
    for _ in range(2000):
        _kernel.conv(a, b)


def bench_reduce() -> None:
    rng = random.Random(12)
    rows = _reduction_rows(105)  # phi(105) = 48
    d = 48
    vec = [rng.randint(-10 ** 12, 10 ** 12) for _ in range(2 * d - 1)]
    for _ in range(4000):
        _kernel.reduce_cyclo(vec, rows, d)


def bench_frobenius_tower() -> None:
    clear_caches()
    for k in range(1, 11):
        gamma = cyclotomic.zeta_pow(11, -k)
        appell.frobenius_euler(8, 2, 2, gamma)


def bench_esum_block() -> None:
    clear_caches()
    c = family("ramanujan", 12)
    for m in range(1, 7):
        for r in range(4):
            dedekind.e_sum(m, 12, r, 1, 2, c)


WORKLOADS = (
    ("conv 48x48 bigint x2000", bench_conv),
    ("reduce_cyclo n=105 x4000", bench_reduce),
    ("frobenius tower n=11 m<=8", bench_frobenius_tower),
    ("e_sum grid n=12 m<=6", bench_esum_block),
)


def run(repeat: int) -> None:
    backends = _kernel.available_backends()
    if "compiled" not in backends:
        print("compiled kernel not built; timing the python backend alone")
    results: dict[str, dict[str, float]] = {}
    for backend in backends:
        _kernel.use_backend(backend)
        for label, fn in WORKLOADS:
            best = min(_timed(fn) for _ in range(repeat))
            results.setdefault(label, {})[backend] = best
    _kernel.use_backend(backends[-1])
    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  {'python':>10}"
    if "compiled" in backends:
        header += f"  {'compiled':>10}  {'speedup':>8}"
    print(header)
    for label, _ in WORKLOADS:
        times = results[label]
        line = f"{label:<{width}}  {times['python'] * 1e3:>8.1f}ms"
        if "compiled" in times:
            ratio = times["python"] / times["compiled"]
            line += f"  {times['compiled'] * 1e3:>8.1f}ms  {ratio:>7.2f}x"
        print(line)


def _timed(fn) -> float:
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    run(parser.parse_args().repeat)
