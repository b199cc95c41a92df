import math

import pytest

from housemarket.bench import (
    BenchRow,
    doubling,
    fit_exponent,
    fits,
    format_table,
    run_bench,
)


def test_doubling():
    assert doubling(1000, 64_000) == [1000, 2000, 4000, 8000, 16_000, 32_000, 64_000]
    assert doubling(100, 150) == [100]


@pytest.mark.parametrize("k", [1.0, 2.0, 0.5])
def test_fit_recovers_power_law(k):
    ns = [100, 200, 400, 800]
    assert math.isclose(fit_exponent(ns, [3e-6 * n ** k for n in ns]), k, rel_tol=1e-9)


def test_small_run_rows_and_bounds():
    rows = run_bench(400, families=("worstcase", "consensual"), min_n=100, reps=1)
    assert len(rows) == 2 * 3 * 2
    assert all(r.within_bound for r in rows)
    assert set(fits(rows)) == {(f, m) for f in ("worstcase", "consensual")
                               for m in ("crawler", "diver")}
    # the worst case makes every screening pass scan all remaining agents
    worst = {r.n: r.bits for r in rows if r.family == "worstcase" and r.mechanism == "crawler"}
    assert worst[100] == 100 * 99 // 2 + 100 * 7


def test_rejects_tiny_max_n():
    with pytest.raises(ValueError):
        run_bench(10)


def test_format_table():
    rows = [BenchRow("worstcase", n, "diver", 1e-3 * n / 100, 3 * n - 1, 4 * n) for n in (100, 200)]
    text = format_table(rows)
    lines = text.splitlines()
    assert lines[0].split() == ["family", "n", "mechanism", "seconds", "bits", "bound", "ok"]
    assert lines[1].split() == ["worstcase", "100", "diver", "0.001000", "299", "400", "yes"]
    assert lines[-1] == "fit worstcase diver exponent 1.000"
    assert len({len(line) for line in lines[:3]}) == 1
