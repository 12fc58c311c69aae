"""Figure rendering for sweep outputs (SVG next to the CSV)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_curve(
    path: str | Path,
    x: list[float],
    y: list[float],
    xlabel: str,
    ylabel: str,
    title: str = "",
    logx: bool = False,
    logy: bool = False,
) -> Path:
    """Render a single line chart to an SVG file and return its path."""
    out = Path(path)
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    ax.plot(x, y, linewidth=1.6)
    if logx:
        ax.set_xscale("log")
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.grid(True, alpha=0.3, linestyle=":")
    fig.tight_layout()
    fig.savefig(out, format="svg")
    plt.close(fig)
    return out
