#!/usr/bin/env python3
"""
Random-dissection experiment: for each polygon size, sample dissections uniformly, measure the
dual tree's max degree and fineness, the facial circumference and the longest induced run of
degree-2 vertices, and write one CSV row per sample plus one summary row per size.

Only the chord set is random; vertex labels stay at their polygon positions, which does not change
any of the measured quantities.

Config file (JSON; missing keys fall back to .env / defaults):
  {"sizes": [8, 16, 32], "samples_per_size": 20, "seed": 1, "fineness_cap": 0,
   "output_path": "data/experiments/run.csv"}

Usage:
  python src/run_experiment.py experiment.json [--workers 4]
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

from bop import build_graph
from dissections import generator_for, sample_dissection
from env_manager import EXPERIMENT_DIR, EXPERIMENT_SEED, EXPERIMENT_WORKERS, FINENESS_CAP, get_logger
from facing import facing_of_dissection
from tree_params import fineness, longest_degree_two_induced_path

CSV_FIELDS = ["n", "seed", "sample", "chords", "delta_dual", "r_dual", "f", "deg2path"]
_NUMERIC = ["chords", "delta_dual", "r_dual", "f", "deg2path"]

log = get_logger("experiment")


@dataclass
class ExperimentConfig:
    sizes: List[int]
    samples_per_size: int = 1
    seed: int = EXPERIMENT_SEED
    fineness_cap: int = FINENESS_CAP
    output_path: Path = field(default_factory=lambda: EXPERIMENT_DIR / "experiment.csv")

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("sizes must not be empty")
        bad = [n for n in self.sizes if n < 3]
        if bad:
            raise ValueError(f"polygon sizes must be at least 3, got {bad}")
        if self.samples_per_size < 1:
            raise ValueError(f"samples_per_size must be at least 1, got {self.samples_per_size}")
        if self.fineness_cap < 0:
            raise ValueError(f"fineness_cap must be non-negative, got {self.fineness_cap}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}")
        self.output_path = Path(self.output_path)


def load_experiment_config(path: Path) -> ExperimentConfig:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: expected a JSON object")
    known = {"sizes", "samples_per_size", "seed", "fineness_cap", "output_path"}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ValueError(f"{path}: unknown keys {unknown}")
    if "sizes" not in raw:
        raise ValueError(f"{path}: 'sizes' is required")
    return ExperimentConfig(**raw)


@dataclass
class SampleRecord:
    n: int
    index: int
    chord_count: int
    delta_dual: int
    r_dual: Optional[int]  # None when the fineness cap was exceeded
    f: int
    deg2path: int
    cap: int  # largest r tried for r_dual

    def row(self, seed: int) -> Dict[str, str]:
        return {
            "n": str(self.n),
            "seed": str(seed),
            "sample": str(self.index),
            "chords": str(self.chord_count),
            "delta_dual": str(self.delta_dual),
            "r_dual": f">{self.cap}" if self.r_dual is None else str(self.r_dual),
            "f": str(self.f),
            "deg2path": str(self.deg2path),
        }


def _default_cap(n: int) -> int:
    # dual of an n-gon dissection has at most 2n - 2 vertices
    return 2 * n - 2


def measure_sample(n: int, index: int, seed: int, fineness_cap: int = 0) -> SampleRecord:
    """Measure sample `index` of size n; a zero cap means 2n - 2, the largest possible dual order."""
    cap = fineness_cap or _default_cap(n)
    d = sample_dissection(n, generator_for(seed, n, index))
    fs = facing_of_dissection(d)
    dual = fs.gwl.h
    delta = dual.max_degree()
    f = max((len(c) for c in fs.faces()), default=0)
    if delta != f:
        raise RuntimeError(f"n={n} sample {index}: dual max degree {delta} differs from facial circumference {f}")
    return SampleRecord(
        n=n,
        index=index,
        chord_count=len(d.chords),
        delta_dual=delta,
        r_dual=fineness(dual, cap),
        f=f,
        deg2path=longest_degree_two_induced_path(build_graph(d)),
        cap=cap,
    )


def _mean_max(values: pd.Series) -> str:
    values = values.dropna()
    if values.empty:
        return "-"
    return f"{values.mean():.4f}/{int(values.max())}"


def summary_rows(records: List[SampleRecord], seed: int) -> List[Dict[str, str]]:
    """One row per size with `mean/max` cells; capped fineness values are left out of r_dual."""
    df = pd.DataFrame(
        [
            {
                "n": r.n,
                "chords": r.chord_count,
                "delta_dual": r.delta_dual,
                "r_dual": r.r_dual,
                "f": r.f,
                "deg2path": r.deg2path,
            }
            for r in records
        ]
    )
    df["r_dual"] = pd.to_numeric(df["r_dual"], errors="coerce")
    rows = []
    for n, group in df.groupby("n", sort=True):
        row = {"n": str(n), "seed": str(seed), "sample": "summary"}
        row.update({col: _mean_max(group[col]) for col in _NUMERIC})
        rows.append(row)
    return rows


def run_experiment(cfg: ExperimentConfig, workers: int = EXPERIMENT_WORKERS) -> Path:
    """Write the CSV; output is byte-identical for a fixed config regardless of `workers`."""
    tasks = [(n, i) for n in cfg.sizes for i in range(cfg.samples_per_size)]
    log.info("experiment sizes=%s samples=%d seed=%d workers=%d", cfg.sizes, cfg.samples_per_size, cfg.seed, workers)
    results: Dict[tuple, SampleRecord] = {}
    with ThreadPoolExecutor(max_workers=max(1, workers)) as ex:
        futures = {ex.submit(measure_sample, n, i, cfg.seed, cfg.fineness_cap): (n, i) for n, i in tasks}
        for fut in as_completed(futures):
            results[futures[fut]] = fut.result()
    records = [results[key] for key in sorted(results)]
    capped = sum(1 for r in records if r.r_dual is None)
    if capped:
        log.warning("%d samples exceeded the fineness cap", capped)

    out = cfg.output_path
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="", encoding="utf-8") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in records:
            w.writerow(r.row(cfg.seed))
        for row in summary_rows(records, cfg.seed):
            w.writerow(row)
    log.info("wrote %d rows to %s", len(records), out)
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description="Sample random dissections and record dual-tree statistics")
    ap.add_argument("config", help="JSON experiment config")
    ap.add_argument("--workers", type=int, default=EXPERIMENT_WORKERS, help=f"Thread pool size (default {EXPERIMENT_WORKERS})")
    args = ap.parse_args()
    try:
        cfg = load_experiment_config(Path(args.config))
    except (OSError, ValueError, TypeError) as e:
        print(f"Invalid config: {e}", file=sys.stderr)
        return 2
    out = run_experiment(cfg, workers=args.workers)
    print(f"Wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
