"""Deterministic machine-readable writers: CSV, flat JSON, self-contained SVG.

Identical inputs must produce byte-identical text, so all float formatting is
explicit: 12 significant digits in CSV, shortest round-trip (repr) in JSON,
fixed two-decimal coordinates in SVG.
"""

from __future__ import annotations

import json
from typing import Sequence

from .bounds import BoundReport
from .rect_spectra import MinimiserScan

CSV_HEADER = "a,owen,simple,liyau_k1,ritz_upper"

SVG_WIDTH = 800
SVG_HEIGHT = 500
_MARGIN_LEFT = 70.0
_MARGIN_RIGHT = 25.0
_MARGIN_TOP = 25.0
_MARGIN_BOTTOM = 55.0


def fmt_sig(x: float, digits: int = 12) -> str:
    """Fixed significant-digit decimal used in CSV cells."""
    return f"{x:.{digits}g}"


def bounds_csv(reports: Sequence[BoundReport]) -> str:
    """CSV text for a bounds table: header plus one row per aspect, LF-ended."""
    lines = [CSV_HEADER]
    for report in reports:
        ritz = fmt_sig(report.ritz_upper) if report.ritz_upper is not None else ""
        lines.append(
            ",".join(
                (
                    fmt_sig(report.a.a),
                    fmt_sig(report.owen),
                    fmt_sig(report.simple),
                    fmt_sig(report.liyau_k1),
                    ritz,
                )
            )
        )
    return "\n".join(lines) + "\n"


def flat_json(payload: dict) -> str:
    """One-level JSON document with shortest round-trip floats, LF-ended."""
    return json.dumps(payload, ensure_ascii=False) + "\n"


def _svg_coords(
    xs: Sequence[float], ys: Sequence[float]
) -> tuple[list[tuple[float, float]], float, float, float, float]:
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if x_hi <= x_lo:
        x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
    if y_hi <= y_lo:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    plot_w = SVG_WIDTH - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_h = SVG_HEIGHT - _MARGIN_TOP - _MARGIN_BOTTOM

    def to_px(x: float, y: float) -> tuple[float, float]:
        px = _MARGIN_LEFT + (x - x_lo) / (x_hi - x_lo) * plot_w
        py = _MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h
        return px, py

    return [to_px(x, y) for x, y in zip(xs, ys)], x_lo, x_hi, y_lo, y_hi


def scan_svg(scan: MinimiserScan) -> str:
    """Self-contained SVG line plot of lambda_k over the aspect grid.

    Fixed 800x500 canvas, polyline for the curve, circle at the argmin,
    axes labeled `a` and `lambda`; no external assets, deterministic bytes.
    """
    points, x_lo, x_hi, y_lo, y_hi = _svg_coords(scan.grid, scan.values)
    star_px, star_py = points[scan.grid.index(scan.a_star.a)]
    poly = " ".join(f"{px:.2f},{py:.2f}" for px, py in points)
    x0, y0 = _MARGIN_LEFT, SVG_HEIGHT - _MARGIN_BOTTOM
    x1, y1 = SVG_WIDTH - _MARGIN_RIGHT, _MARGIN_TOP
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect x="0" y="0" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="white"/>',
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y0:.2f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x0:.2f}" y2="{y1:.2f}" stroke="black" stroke-width="1"/>',
        f'<text x="{(x0 + x1) / 2:.2f}" y="{SVG_HEIGHT - 12}" text-anchor="middle" '
        'font-family="sans-serif" font-size="16">a</text>',
        f'<text x="18" y="{(y0 + y1) / 2:.2f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16" transform="rotate(-90 18 {(y0 + y1) / 2:.2f})">lambda</text>',
        f'<text x="{x0:.2f}" y="{y0 + 18:.2f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12">{fmt_sig(x_lo, 6)}</text>',
        f'<text x="{x1:.2f}" y="{y0 + 18:.2f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12">{fmt_sig(x_hi, 6)}</text>',
        f'<text x="{x0 - 6:.2f}" y="{y0:.2f}" text-anchor="end" font-family="sans-serif" '
        f'font-size="12">{fmt_sig(y_lo, 6)}</text>',
        f'<text x="{x0 - 6:.2f}" y="{y1 + 4:.2f}" text-anchor="end" font-family="sans-serif" '
        f'font-size="12">{fmt_sig(y_hi, 6)}</text>',
        f'<polyline points="{poly}" fill="none" stroke="#1f6fb2" stroke-width="1.5"/>',
        f'<circle cx="{star_px:.2f}" cy="{star_py:.2f}" r="4" fill="#c23b22"/>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"


def write_text(path: str, text: str) -> None:
    """Write text with LF endings regardless of platform."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
