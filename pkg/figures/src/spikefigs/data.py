"""Readers for the experiment output formats (CSV/JSON only).

This package deliberately has no dependency on the simulator: everything is
reconstructed from the documented files of an experiment directory
(aggregate.csv, verdicts.json, and per-seed run directories with meta.json,
spikes.csv, rates.csv, weights.csv, schedule.csv).
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

AGGREGATE_HEADER = ["metric", "group_from", "group_to", "time_ms", "mean", "sem"]
SPIKES_HEADER = ["time_ms", "neuron"]
WEIGHTS_HEADER = ["time_ms", "from_group", "to_group", "mean_weight"]


class MissingColumns(ValueError):
    def __init__(self, path, expected, got) -> None:
        super().__init__(
            f"{path}: expected header {','.join(expected)!r}, found {','.join(got)!r}")


def _rows(path: Path, expected_header: list[str]):
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, [])
        if header != expected_header:
            raise MissingColumns(path, expected_header, header)
        yield from reader


def read_aggregate(path: str | Path) -> dict:
    """aggregate.csv -> {'rate': {group: series}, 'weight': {(from, to): series}}
    where a series is (times_ms, mean, sem-or-None)."""
    acc: dict[str, dict] = {"rate": {}, "weight": {}}
    for metric, a, b, t, mean, sem in _rows(Path(path), AGGREGATE_HEADER):
        key = a if metric == "rate" else (a, b)
        entry = acc[metric].setdefault(key, ([], [], []))
        entry[0].append(int(t))
        entry[1].append(float(mean))
        entry[2].append(float(sem) if sem else None)
    out: dict[str, dict] = {"rate": {}, "weight": {}}
    for metric, series in acc.items():
        for key, (times, means, sems) in series.items():
            sem_arr = None if any(s is None for s in sems) else np.asarray(sems)
            out[metric][key] = (np.asarray(times), np.asarray(means), sem_arr)
    return out


def read_meta(run_dir: str | Path) -> dict:
    return json.loads((Path(run_dir) / "meta.json").read_text(encoding="utf-8"))


def read_spikes(run_dir: str | Path) -> tuple[np.ndarray, np.ndarray]:
    times, neurons = [], []
    for t, n in _rows(Path(run_dir) / "spikes.csv", SPIKES_HEADER):
        times.append(int(t))
        neurons.append(int(n))
    return np.asarray(times, dtype=np.int64), np.asarray(neurons, dtype=np.int64)


def read_run_weights(run_dir: str | Path) -> dict:
    """weights.csv of one run -> {(from, to): (times_ms, mean_weight)}."""
    acc: dict[tuple[str, str], tuple[list, list]] = {}
    for t, a, b, w in _rows(Path(run_dir) / "weights.csv", WEIGHTS_HEADER):
        entry = acc.setdefault((a, b), ([], []))
        entry[0].append(int(t))
        entry[1].append(float(w))
    return {k: (np.asarray(ts), np.asarray(ws)) for k, (ts, ws) in acc.items()}


def seed_dirs(experiment_dir: str | Path) -> list[Path]:
    return sorted(p for p in Path(experiment_dir).glob("seed_*") if p.is_dir())


def stimulus_roles(experiment_dir: str | Path) -> dict:
    """Signal/target/control tags from verdicts.json (falls back to a run's meta)."""
    root = Path(experiment_dir)
    if (root / "verdicts.json").exists():
        config = json.loads((root / "verdicts.json").read_text(encoding="utf-8"))["config"]
    else:
        runs = seed_dirs(root)
        if not runs:
            raise FileNotFoundError(f"no verdicts.json or seed_* directories in {root}")
        config = read_meta(runs[0])["config"]
    return {
        "signal": config["signal_target"],
        "targets": list(config["target_list"]),
        "control": config["random_target"],
    }
