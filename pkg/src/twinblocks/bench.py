"""Benchmark harness: random twinless strongly connected graphs, all algorithms, CSV rows."""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass

from .blocks import ALGORITHMS, RunStats, two_twinless_blocks
from .errors import InvariantError
from .graph import random_tsc_digraph

CSV_COLUMNS = ("n", "m", "t", "s", "algo", "pair_updates", "wall_millis")


@dataclass
class BenchConfig:
    sizes: tuple = (50, 100, 200, 300)
    seeds: tuple = (0,)
    algos: tuple = ALGORITHMS
    extra_per_vertex: float = 1.0
    budget_ms: float | None = None


def bench_rows(config: BenchConfig):
    """Yield one dict per (graph, algorithm).

    All algorithms must agree on every graph, and the improved algorithm's
    pair updates must stay within ``t * s**2``; either failure raises
    :class:`InvariantError`.  When the budget runs out a single warning
    row (``{"warning": ...}``) is yielded and the run stops.
    """
    start = time.perf_counter()
    for n in config.sizes:
        for seed in config.seeds:
            elapsed = (time.perf_counter() - start) * 1000
            if config.budget_ms is not None and elapsed > config.budget_ms:
                yield {"warning": f"budget of {config.budget_ms:g} ms exceeded after {elapsed:.0f} ms; stopped before n={n} seed={seed}"}
                return
            G = random_tsc_digraph(n, int(config.extra_per_vertex * n), seed)
            results = {}
            for algo in config.algos:
                stats = RunStats()
                t0 = time.perf_counter()
                results[algo] = two_twinless_blocks(G, algo, stats=stats)
                wall = (time.perf_counter() - t0) * 1000
                if algo == "improved" and stats.pair_updates > stats.t * stats.s**2:
                    raise InvariantError(
                        f"improved algorithm examined {stats.pair_updates} pairs, above t*s^2 = {stats.t * stats.s**2}"
                    )
                yield {
                    "n": G.n,
                    "m": G.m,
                    "t": stats.t,
                    "s": stats.s,
                    "algo": algo,
                    "pair_updates": stats.pair_updates,
                    "wall_millis": round(wall, 3),
                }
            if len(set(results.values())) > 1:
                raise InvariantError(f"algorithms disagree on n={n} seed={seed}")


def write_csv(rows, out) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    count = 0
    for row in rows:
        if "warning" in row:
            out.write(f"# warning: {row['warning']}\n")
            continue
        writer.writerow([row[c] for c in CSV_COLUMNS])
        count += 1
    return count


def bench_csv(config: BenchConfig) -> str:
    buf = io.StringIO()
    write_csv(bench_rows(config), buf)
    return buf.getvalue()
