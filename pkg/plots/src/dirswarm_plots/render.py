"""Line-chart rendering of swarm metrics from aggregate run CSVs.

Each input CSV is one (algorithm, w) aggregate with an `interval` column and
one column per metric; render() draws one curve per input file. Smoothing is
display-only — a rolling mean applied to the plotted series, never to the
underlying files.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class MissingColumnError(KeyError):
    """The requested metric column is absent from an input CSV."""


class EmptyCsvError(ValueError):
    """An input CSV has a header but no data rows (or is entirely empty)."""


@dataclass(frozen=True)
class PlotSpec:
    inputs: tuple[str, ...]
    metric: str
    out_path: str
    smooth_window: int = 50
    title: str | None = None

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        if self.smooth_window < 1:
            raise ValueError("smooth_window must be >= 1")


def load_series(path: str, metric: str) -> tuple[np.ndarray, np.ndarray, str]:
    """Read (intervals, values, curve label) for one metric from one CSV."""
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise EmptyCsvError(f"no data rows in {path}")
    if metric not in rows[0]:
        raise MissingColumnError(f"column '{metric}' not found in {path}")
    if "interval" not in rows[0]:
        raise MissingColumnError(f"column 'interval' not found in {path}")
    intervals = np.array([int(r["interval"]) for r in rows])
    values = np.array([float(r[metric]) for r in rows])
    label = _label(rows[0], path)
    return intervals, values, label


def _label(row: dict, path: str) -> str:
    algorithm = row.get("algorithm")
    w = row.get("w")
    if algorithm and w is not None:
        return f"{algorithm} (w={w})"
    return path


def smooth(values: np.ndarray, window: int) -> np.ndarray:
    """Rolling mean with a warm-up prefix: entry t averages the last
    min(t+1, window) values, so window=1 is the identity and the output
    length always matches the input."""
    if window < 1:
        raise ValueError("window must be >= 1")
    if window == 1 or len(values) == 0:
        return values.copy()
    csum = np.cumsum(values)
    out = np.empty_like(values, dtype=float)
    head = min(window, len(values))
    out[:head] = csum[:head] / np.arange(1, head + 1)
    if len(values) > window:
        out[window:] = (csum[window:] - csum[:-window]) / window
    return out


def render(spec: PlotSpec) -> str:
    """Draw one curve per input CSV and write the figure to spec.out_path."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for path in spec.inputs:
        intervals, values, label = load_series(path, spec.metric)
        ax.plot(intervals, smooth(values, spec.smooth_window), label=label)
    ax.set_xlabel("NDM interval")
    ax.set_ylabel(spec.metric)
    if spec.title:
        ax.set_title(spec.title)
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(spec.out_path, dpi=150)
    plt.close(fig)
    return spec.out_path
