"""The four figure kinds: rate curves with SEM bands, weight trajectories,
first/last-epoch rasters, and the learned group-level topology diagram."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Arc, Circle, FancyArrowPatch  # noqa: E402

from .data import (  # noqa: E402
    read_aggregate,
    read_meta,
    read_run_weights,
    read_spikes,
    seed_dirs,
    stimulus_roles,
)

KINDS = ("rates", "weights", "raster", "topology")

EDGE_THRESHOLD = 5.0  # edges appear above this absolute mean weight
THICK_THRESHOLD = 10.0  # and are drawn thick above this one

SIGNAL_COLOR = "tab:red"
TARGET_COLOR = "tab:blue"
OTHER_COLOR = "black"
INHIBITORY_COLOR = "tab:blue"
EXCITATORY_COLOR = "black"


@dataclass
class FigureSpec:
    """What to render: an experiment directory, a figure kind, and options."""

    experiment_dir: Path
    kind: str
    out_path: Path
    groups: list[str] = field(default_factory=list)  # empty = all
    epoch_ms: int = 3000  # raster panel width
    seed_dir: str = ""  # raster/topology run selection, default first seed

    def __post_init__(self) -> None:
        self.experiment_dir = Path(self.experiment_dir)
        self.out_path = Path(self.out_path)
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")


def render(spec: FigureSpec) -> Path:
    """Render one figure deterministically from the directory's CSVs."""
    fig = {
        "rates": _render_rates,
        "weights": _render_weights,
        "raster": _render_raster,
        "topology": _render_topology,
    }[spec.kind](spec)
    spec.out_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.out_path, dpi=150)
    plt.close(fig)
    return spec.out_path


def _band(ax, times, mean, sem, label, color=None):
    line, = ax.plot(times / 1000.0, mean, label=label, color=color)
    if sem is not None:
        ax.fill_between(times / 1000.0, mean - sem, mean + sem,
                        alpha=0.3, color=line.get_color(), linewidth=0)


def _render_rates(spec: FigureSpec):
    series = read_aggregate(spec.experiment_dir / "aggregate.csv")["rate"]
    chosen = spec.groups or sorted(series)
    fig, ax = plt.subplots(figsize=(7, 4))
    for tag in chosen:
        if tag not in series:
            raise ValueError(f"group {tag!r} not present in aggregate.csv "
                             f"(has {sorted(series)})")
        _band(ax, *series[tag], label=tag)
    ax.set_xlabel("time (s)")
    ax.set_ylabel("firing rate (Hz)")
    ax.set_title("group firing rates (mean ± SEM across seeds)")
    ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    return fig


def _render_weights(spec: FigureSpec):
    series = read_aggregate(spec.experiment_dir / "aggregate.csv")["weight"]
    inhib_tags = {a for a, _ in series} & {"inhibitory"}
    if not inhib_tags:
        raise ValueError("aggregate.csv has no inhibitory-source weight series")
    fig, (ax_out, ax_in) = plt.subplots(1, 2, figsize=(10, 4))
    for (a, b), data in sorted(series.items()):
        if spec.groups and a not in spec.groups and b not in spec.groups:
            continue
        if a == "inhibitory" and b != "inhibitory":
            _band(ax_out, *data, label=f"I→{b}")
        elif b == "inhibitory" and a != "inhibitory":
            _band(ax_in, *data, label=f"{a}→I")
    ax_out.set_title("from the inhibitory side")
    ax_in.set_title("onto the inhibitory side")
    for ax in (ax_out, ax_in):
        ax.set_xlabel("time (s)")
        ax.set_ylabel("mean weight")
        ax.legend(loc="best", fontsize=8)
    fig.tight_layout()
    return fig


def _pick_run(spec: FigureSpec) -> Path:
    if spec.seed_dir:
        run = spec.experiment_dir / spec.seed_dir
        if not run.is_dir():
            raise FileNotFoundError(f"run directory {run} does not exist")
        return run
    runs = seed_dirs(spec.experiment_dir)
    if not runs:
        raise FileNotFoundError(f"no seed_* run directories in {spec.experiment_dir}")
    return runs[0]


def _render_raster(spec: FigureSpec):
    run = _pick_run(spec)
    meta = read_meta(run)
    times, neurons = read_spikes(run)
    roles = stimulus_roles(spec.experiment_dir)
    colors = {}
    for tag, members in meta["groups"].items():
        if tag == roles["signal"]:
            color = SIGNAL_COLOR
        elif tag in roles["targets"]:
            color = TARGET_COLOR
        else:
            color = OTHER_COLOR
        for n in members:
            colors[n] = color
    duration = meta["duration_ms"]
    windows = [(0, spec.epoch_ms), (duration - spec.epoch_ms, duration)]

    fig, axes = plt.subplots(2, 1, figsize=(9, 6), sharey=True)
    for ax, (lo, hi) in zip(axes, windows):
        mask = (times >= lo) & (times < hi)
        point_colors = [colors.get(int(n), OTHER_COLOR) for n in neurons[mask]]
        ax.scatter(times[mask], neurons[mask], s=1.5, c=point_colors, marker=".")
        ax.set_xlim(lo, hi)
        ax.set_ylabel("neuron")
        ax.set_title(f"{lo}–{hi} ms")
    axes[-1].set_xlabel("time (ms)")
    fig.suptitle(f"spike raster, seed {meta['seed']} "
                 f"(red: signal group, blue: target group)")
    fig.tight_layout()
    return fig


def select_edges(final_weights: dict) -> dict:
    """Apply the display thresholds to final mean weights per group pair.

    Returns {(from, to): {'weight': w, 'thick': bool}} for pairs whose
    absolute mean weight exceeds the edge threshold.
    """
    edges = {}
    for pair, w in final_weights.items():
        if abs(w) > EDGE_THRESHOLD:
            edges[pair] = {"weight": w, "thick": abs(w) > THICK_THRESHOLD}
    return edges


def final_mean_weights(spec: FigureSpec) -> dict:
    """Final sample of every group-pair weight series, averaged across seeds
    when aggregate.csv is present, otherwise from the selected run."""
    aggregate = spec.experiment_dir / "aggregate.csv"
    if aggregate.exists():
        series = read_aggregate(aggregate)["weight"]
        return {pair: float(mean[-1]) for pair, (_, mean, _) in series.items()}
    weights = read_run_weights(_pick_run(spec))
    return {pair: float(ws[-1]) for pair, (_, ws) in weights.items()}


def _render_topology(spec: FigureSpec):
    finals = final_mean_weights(spec)
    edges = select_edges(finals)
    tags = sorted({t for pair in finals for t in pair})
    angles = np.linspace(0.5 * np.pi, 2.5 * np.pi, len(tags), endpoint=False)
    pos = {tag: (np.cos(a), np.sin(a)) for tag, a in zip(tags, angles)}

    fig, ax = plt.subplots(figsize=(6, 6))
    for (a, b), edge in sorted(edges.items()):
        color = EXCITATORY_COLOR if edge["weight"] > 0 else INHIBITORY_COLOR
        width = 2.8 if edge["thick"] else 1.0
        if a == b:
            x, y = pos[a]
            loop = Arc((x * 1.22, y * 1.22), 0.3, 0.3, theta1=0, theta2=300,
                       color=color, linewidth=width)
            ax.add_patch(loop)
            continue
        arrow = FancyArrowPatch(
            pos[a], pos[b], connectionstyle="arc3,rad=0.12",
            arrowstyle="-|>", mutation_scale=14, shrinkA=18, shrinkB=18,
            color=color, linewidth=width)
        ax.add_patch(arrow)
    for tag, (x, y) in pos.items():
        ax.add_patch(Circle((x, y), 0.14, facecolor="white", edgecolor="black", zorder=3))
        ax.text(x, y, tag, ha="center", va="center", fontsize=8, zorder=4)
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"learned topology (|mean w| > {EDGE_THRESHOLD:g}; "
                 f"thick > {THICK_THRESHOLD:g}; blue = inhibitory)")
    fig.tight_layout()
    return fig
