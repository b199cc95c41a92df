"""Empirical scaling of the Crawler and the Diver.

Each point is the median wall time (``time.perf_counter``) of ``reps``
runs on one prebuilt instance, with the garbage collector paused as
``timeit`` does. Growth exponents are least-squares slopes of log time
against log n.
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .core import FlankOrder
from .domains import gen_consensual, gen_crawler_worstcase
from .mechanisms import crawler, diver
from .transcript import crawler_bound, diver_bound


def _consensual(n):
    return gen_consensual(n, FlankOrder(n, n // 2))


FAMILIES = {
    "worstcase": gen_crawler_worstcase,
    "consensual": _consensual,
}

MECHANISMS = {
    "crawler": (lambda inst: crawler(inst, events=False)[2], crawler_bound),
    "diver": (lambda inst: diver(inst)[1], diver_bound),
}


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    mechanism: str
    seconds: float
    bits: int
    bound: int

    @property
    def within_bound(self):
        return self.bits <= self.bound


def doubling(min_n, max_n):
    sizes = []
    n = min_n
    while n <= max_n:
        sizes.append(n)
        n *= 2
    return sizes


def time_median(fn, arg, reps):
    times = []
    result = None
    for _ in range(reps):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            result = fn(arg)
            times.append(time.perf_counter() - t0)
        finally:
            gc.enable()
    return statistics.median(times), result


def fit_exponent(ns, seconds):
    slope, _ = np.polyfit(np.log(ns), np.log(seconds), 1)
    return float(slope)


def warm_up():
    # first call compiles (or loads from cache) the crawler kernel
    crawler(gen_crawler_worstcase(4), events=False)


def run_bench(max_n, families=("worstcase",), min_n=1000, reps=5,
              mechanisms=("crawler", "diver"), progress=None):
    if max_n < 100:
        raise ValueError("max_n must be at least 100")
    min_n = min(min_n, max_n)
    warm_up()
    rows = []
    for family in families:
        make = FAMILIES[family]
        for n in doubling(min_n, max_n):
            inst = make(n)
            for mech in mechanisms:
                run, bound = MECHANISMS[mech]
                seconds, transcript = time_median(run, inst, reps)
                row = BenchRow(family, n, mech, seconds, transcript.total_bits, bound(n))
                rows.append(row)
                if progress:
                    progress(row)
    return rows


def fits(rows):
    """``{(family, mechanism): exponent}`` over all rows of each series."""
    series = {}
    for r in rows:
        series.setdefault((r.family, r.mechanism), []).append(r)
    return {
        key: fit_exponent([r.n for r in rs], [r.seconds for r in rs])
        for key, rs in series.items()
        if len(rs) >= 2
    }


def format_table(rows):
    header = ("family", "n", "mechanism", "seconds", "bits", "bound", "ok")
    body = [
        (r.family, str(r.n), r.mechanism, f"{r.seconds:.6f}", str(r.bits), str(r.bound),
         "yes" if r.within_bound else "NO")
        for r in rows
    ]
    widths = [max(len(c) for c in col) for col in zip(header, *body)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(line, widths)) for line in [header, *body]]
    for (family, mech), k in fits(rows).items():
        lines.append(f"fit {family} {mech} exponent {k:.3f}")
    return "\n".join(lines) + "\n"
