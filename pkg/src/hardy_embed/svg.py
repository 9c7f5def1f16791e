"""Minimal dependency-free SVG line plots (convenience output, not a contract)."""

from __future__ import annotations

import math

__all__ = ["line_plot_svg"]

_WIDTH, _HEIGHT = 640, 440
_MARGIN = 60


def _transform(values, lo, hi, pix_lo, pix_hi, log: bool):
    if log:
        lo, hi = math.log10(lo), math.log10(hi)
        values = [math.log10(v) for v in values]
    span = (hi - lo) or 1.0
    return [pix_lo + (v - lo) / span * (pix_hi - pix_lo) for v in values]


def line_plot_svg(x, y, xlabel: str, ylabel: str, title: str = "", logx: bool = False) -> str:
    """Single-series line plot; returns the SVG document as text."""
    pts = [(float(a), float(b)) for a, b in zip(x, y) if math.isfinite(a) and math.isfinite(b)]
    if not pts:
        raise ValueError("nothing to plot")
    pts.sort()
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    if logx and min(xs) <= 0:
        raise ValueError("log x-axis requires positive x values")
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    if y_lo == y_hi:
        y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
    px = _transform(xs, x_lo, x_hi, _MARGIN, _WIDTH - _MARGIN, logx)
    py = _transform(ys, y_lo, y_hi, _HEIGHT - _MARGIN, _MARGIN, False)
    path = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))
    fmt = "{:.6g}".format
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<text x="{_WIDTH // 2}" y="24" text-anchor="middle" font-size="16">{title}</text>',
        f'<line x1="{_MARGIN}" y1="{_HEIGHT - _MARGIN}" x2="{_WIDTH - _MARGIN}" '
        f'y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{_HEIGHT - _MARGIN}" stroke="black"/>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 16}" text-anchor="middle" font-size="13">'
        f"{xlabel}{' (log scale)' if logx else ''}</text>",
        f'<text x="18" y="{_HEIGHT // 2}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 18 {_HEIGHT // 2})">{ylabel}</text>',
        f'<text x="{_MARGIN}" y="{_HEIGHT - _MARGIN + 18}" text-anchor="middle" '
        f'font-size="11">{fmt(x_lo)}</text>',
        f'<text x="{_WIDTH - _MARGIN}" y="{_HEIGHT - _MARGIN + 18}" text-anchor="middle" '
        f'font-size="11">{fmt(x_hi)}</text>',
        f'<text x="{_MARGIN - 6}" y="{_HEIGHT - _MARGIN + 4}" text-anchor="end" '
        f'font-size="11">{fmt(y_lo)}</text>',
        f'<text x="{_MARGIN - 6}" y="{_MARGIN + 4}" text-anchor="end" font-size="11">{fmt(y_hi)}</text>',
        f'<polyline points="{path}" fill="none" stroke="#1f5fbf" stroke-width="1.5"/>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
