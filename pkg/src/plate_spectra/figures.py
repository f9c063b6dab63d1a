"""Matplotlib renderings of the report curves, written next to the CSV/JSON."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bounds import BoundReport
from .rect_spectra import MinimiserScan


def render_bounds_figure(reports: Sequence[BoundReport], path: str) -> None:
    """Lower/upper bound curves for lambda_1 over the aspect grid."""
    aspects = [r.a.a for r in reports]
    fig, ax = plt.subplots(figsize=(8, 5))
    if all(r.ritz_upper is not None for r in reports):
        ax.plot(aspects, [r.ritz_upper for r in reports], color="#c23b22",
                label="Ritz upper bound")
    ax.plot(aspects, [r.owen for r in reports], color="#1f6fb2",
            label="tension-beam lower bound")
    ax.plot(aspects, [r.simple for r in reports], color="#3a923a", linestyle="--",
            label="single-root lower bound")
    ax.plot(aspects, [r.liyau_k1 for r in reports], color="#7f7f7f", linestyle=":",
            label="Li-Yau-type bound")
    ax.set_xlabel("a")
    ax.set_ylabel("lambda_1")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_scan_figure(scan: MinimiserScan, path: str) -> None:
    """lambda_k over the grid with the argmin marked."""
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(scan.grid, scan.values, color="#1f6fb2")
    ax.plot([scan.a_star.a], [scan.lambda_star], "o", color="#c23b22",
            label=f"argmin a={scan.a_star.a:g}")
    ax.set_xlabel("a")
    ax.set_ylabel(f"lambda_{scan.k}")
    ax.legend(loc="upper left")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
