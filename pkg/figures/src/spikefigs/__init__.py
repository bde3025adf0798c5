"""Publication-style figures from spikepred experiment output directories."""

from .data import read_aggregate, read_meta, read_run_weights, read_spikes
from .render import (
    EDGE_THRESHOLD,
    KINDS,
    THICK_THRESHOLD,
    FigureSpec,
    final_mean_weights,
    render,
    select_edges,
)

__version__ = "0.1.0"
