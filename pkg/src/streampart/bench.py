"""Benchmark runner: generate a stream, solve it, compare with the oracle.

Config rows are dictionaries (usually loaded from a JSON list):

    {"generator": {"kind": "uniform", "n": 200, "m": 8, "seed": 3},
     "algorithm": "known-S", "mode": "partb", "epsilon": "1/10", "p": 4}

`algorithm` is one of the solver tags; the declared knowledge handed to the
solver is taken from the generated stream itself, so declarations are always
truthful. Hard generator kinds (yz, index) imply p = 2. Row failures are
captured in the record instead of aborting the run.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from .core import StreamStats, as_fraction
from .generators import GeneratorSpec
from .oracle import opt_bottleneck_binsearch
from .schedulers import (
    KNOWN_MAX_LENGTH_TAG,
    KNOWN_MAX_TAG,
    KNOWN_TOTAL_TAG,
    UNKNOWN_TAG,
    SolveResult,
    solve_known_max,
    solve_known_max_length,
    solve_known_total,
    solve_unknown_part,
    solve_unknown_partb,
)

BENCH_CSV_HEADER = [
    "kind",
    "n",
    "m",
    "t",
    "i",
    "bits",
    "seed",
    "p",
    "mode",
    "algorithm",
    "epsilon",
    "bottleneck_num",
    "bottleneck_den",
    "bottleneck_float",
    "oracle_optimum",
    "ratio",
    "merges",
    "instance_count",
    "space_peak_words",
    "elements_read",
    "wall_time_s",
    "error",
]

HARD_KINDS = ("yz", "index")


@dataclass
class BenchRecord:
    generator: GeneratorSpec
    num_blocks: int
    mode: str
    algorithm: str
    epsilon: Fraction | None
    result: SolveResult | None
    oracle_optimum: int | None
    wall_time_s: float
    error: str | None = None

    @property
    def ratio(self) -> float | None:
        if self.result is None or self.oracle_optimum is None:
            return None
        if self.oracle_optimum == 0:
            return 1.0 if self.result.bottleneck == 0 else float("inf")
        return float(self.result.bottleneck / self.oracle_optimum)

    def to_csv_row(self) -> list:
        spec = self.generator
        result = self.result
        return [
            spec.kind,
            spec.n,
            spec.m,
            spec.t,
            spec.i,
            spec.bits,
            spec.seed,
            self.num_blocks,
            self.mode,
            self.algorithm,
            None if self.epsilon is None else str(self.epsilon),
            None if result is None else result.bottleneck.numerator,
            None if result is None else result.bottleneck.denominator,
            None if result is None else float(result.bottleneck),
            self.oracle_optimum,
            self.ratio,
            None if result is None else result.merges,
            None if result is None else result.instance_count,
            None if result is None else result.space_peak_words,
            None if result is None else result.elements_read,
            round(self.wall_time_s, 6),
            self.error or "",
        ]


def _solve_row(weights: list[int], stats: StreamStats, algorithm: str, num_blocks: int,
               epsilon: Fraction | None, mode: str) -> SolveResult:
    stream = iter(weights)
    if algorithm == KNOWN_TOTAL_TAG:
        return solve_known_total(stream, num_blocks, epsilon, stats.total_weight, mode=mode)
    if algorithm == KNOWN_MAX_LENGTH_TAG:
        return solve_known_max_length(
            stream, num_blocks, epsilon, stats.max_weight, stats.length, mode=mode
        )
    if algorithm == KNOWN_MAX_TAG:
        return solve_known_max(stream, num_blocks, epsilon, stats.max_weight, mode=mode)
    if algorithm == UNKNOWN_TAG:
        if mode == "part":
            return solve_unknown_part(stream, num_blocks)
        return solve_unknown_partb(stream, num_blocks)
    raise ValueError(f"unknown algorithm tag {algorithm!r}")


def run_bench(rows: list[dict]) -> list[BenchRecord]:
    records = []
    for row in rows:
        spec = GeneratorSpec(**row.get("generator", {}))
        algorithm = row.get("algorithm", UNKNOWN_TAG)
        mode = row.get("mode", "part")
        epsilon = None if row.get("epsilon") is None else as_fraction(row["epsilon"])
        num_blocks = row.get("p", 2)
        started = time.perf_counter()
        try:
            if spec.kind in HARD_KINDS and num_blocks != 2:
                raise ValueError(f"generator kind {spec.kind!r} implies p = 2")
            weights = spec.make()
            stats = StreamStats.from_weights(weights)
            result = _solve_row(weights, stats, algorithm, num_blocks, epsilon, mode)
            optimum = opt_bottleneck_binsearch(weights, num_blocks).optimum
            error = None
        except (ValueError, RuntimeError) as exc:
            result = None
            optimum = None
            error = str(exc)
        elapsed = time.perf_counter() - started
        records.append(
            BenchRecord(
                generator=spec,
                num_blocks=num_blocks,
                mode=mode,
                algorithm=algorithm,
                epsilon=epsilon,
                result=result,
                oracle_optimum=optimum,
                wall_time_s=elapsed,
                error=error,
            )
        )
    return records


def load_config(fp: IO[str]) -> list[dict]:
    rows = json.load(fp)
    if not isinstance(rows, list):
        raise ValueError("bench config must be a JSON list of row objects")
    return rows


def write_csv(records: list[BenchRecord], fp: IO[str]) -> None:
    writer = csv.writer(fp)
    writer.writerow(BENCH_CSV_HEADER)
    for record in records:
        writer.writerow(record.to_csv_row())
