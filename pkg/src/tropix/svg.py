"""SVG picture of configurations in the 2-simplex.

The chart sends ``(x1, x2, x3)`` to ``x2*(1, 0) + x3*(1/2, sqrt(3)/2)``: an
equilateral triangle of side 1 with the first vertex at the origin.  The
drawing scales this by ``SCALE`` pixels and flips the y axis.
"""
from __future__ import annotations

import math
from typing import Sequence

SCALE = 400.0
MARGIN = 30.0
POINT_RADIUS = 6.0
TRIANGLE_STROKE = "#000000"
HULL_STROKE = "#1f77b4"
HULL_FILL = "#1f77b4"
HULL_FILL_OPACITY = "0.15"
POINT_FILL = "#d62728"

_H = math.sqrt(3.0) / 2.0


def chart(p: Sequence[float]) -> tuple[float, float]:
    return p[1] + 0.5 * p[2], _H * p[2]


def _pixel(xy: tuple[float, float]) -> tuple[float, float]:
    x, y = xy
    return MARGIN + SCALE * x, MARGIN + SCALE * (_H - y)


def _fmt(v: float) -> str:
    text = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def convex_hull(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Monotone chain; counter-clockwise, no repeated endpoint."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def render(points: Sequence[Sequence[float]]) -> str:
    width = _fmt(2 * MARGIN + SCALE)
    height = _fmt(2 * MARGIN + SCALE * _H)
    corners = [_pixel(chart(v)) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    pix = [_pixel(chart(p)) for p in points]
    hull = convex_hull(pix)

    def coords(ps):
        return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in ps)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <polygon points="{coords(corners)}" fill="none" stroke="{TRIANGLE_STROKE}" stroke-width="1.5"/>',
    ]
    if len(hull) >= 3:
        lines.append(
            f'  <polygon points="{coords(hull)}" fill="{HULL_FILL}" fill-opacity="{HULL_FILL_OPACITY}" '
            f'stroke="{HULL_STROKE}" stroke-width="1.5"/>'
        )
    elif len(hull) == 2:
        lines.append(f'  <polyline points="{coords(hull)}" fill="none" stroke="{HULL_STROKE}" stroke-width="1.5"/>')
    for x, y in pix:
        lines.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(POINT_RADIUS)}" fill="{POINT_FILL}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
