"""SVG and CSV emitters for curve dumps.

The SVG path is a dense polyline of the dump's samples (no arc
primitives; exactness lives in the samples).  Boundary circles of
curvature are drawn dashed, a demo overlay curve dotted.  The y axis is
flipped on output so the plots match the mathematical orientation.
"""

from __future__ import annotations

import math
from typing import Optional

from .models import CurveDump


def emit_csv(dump: CurveDump) -> str:
    """Sample table with columns u, x, y, tau, k, s."""
    lines = ["u,x,y,tau,k,s"]
    for s in dump.samples:
        arc = "" if s.s is None else repr(s.s)
        lines.append(f"{s.u!r},{s.x!r},{s.y!r},{s.tau!r},{s.k!r},{arc}")
    return "\n".join(lines) + "\n"


def _curvature_circle(x: float, y: float, tau: float, k: float) -> Optional[tuple[float, float, float]]:
    if abs(k) < 1e-9:
        return None
    r = 1.0 / abs(k)
    cx = x + (1.0 / k) * -math.sin(tau)
    cy = y + (1.0 / k) * math.cos(tau)
    return cx, cy, r


def emit_svg(dump: CurveDump, width: int = 720) -> str:
    """Plot of the solved curve, its dashed boundary curvature circles and
    (for demos) the dotted oracle overlay.  The viewBox covers every
    sample point with a 5% margin."""
    xs = [s.x for s in dump.samples]
    ys = [-s.y for s in dump.samples]

    circles = []
    first, last = dump.samples[0], dump.samples[-1]
    for s in (first, last):
        circ = _curvature_circle(s.x, s.y, s.tau, s.k)
        if circ is not None:
            cx, cy, r = circ
            circles.append((cx, -cy, r))

    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    for cx, cy, r in circles:
        min_x = min(min_x, cx - r)
        max_x = max(max_x, cx + r)
        min_y = min(min_y, cy - r)
        max_y = max(max_y, cy + r)
    if dump.overlay:
        for ox, oy in dump.overlay:
            min_x = min(min_x, ox)
            max_x = max(max_x, ox)
            min_y = min(min_y, -oy)
            max_y = max(max_y, -oy)

    span_x = max_x - min_x
    span_y = max_y - min_y
    pad = 0.05 * max(span_x, span_y, 1e-9)
    vb_x, vb_y = min_x - pad, min_y - pad
    vb_w, vb_h = span_x + 2 * pad, span_y + 2 * pad
    stroke = 0.004 * max(vb_w, vb_h)

    def fmt(v: float) -> str:
        return f"{v:.6g}"

    def polyline(points: list[tuple[float, float]]) -> str:
        return " ".join(f"{fmt(px)},{fmt(py)}" for px, py in points)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'viewBox="{fmt(vb_x)} {fmt(vb_y)} {fmt(vb_w)} {fmt(vb_h)}">',
        f'<g fill="none" stroke-width="{fmt(stroke)}">',
        # chord
        f'<line x1="{fmt(xs[0])}" y1="{fmt(ys[0])}" x2="{fmt(xs[-1])}" y2="{fmt(ys[-1])}" '
        f'stroke="#bbbbbb"/>',
    ]
    for cx, cy, r in circles:
        parts.append(
            f'<circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(r)}" stroke="#888888" '
            f'stroke-dasharray="{fmt(4 * stroke)} {fmt(3 * stroke)}"/>'
        )
    if dump.overlay:
        pts = [(ox, -oy) for ox, oy in dump.overlay]
        parts.append(
            f'<polyline points="{polyline(pts)}" stroke="#d06020" '
            f'stroke-dasharray="{fmt(stroke)} {fmt(2.5 * stroke)}" stroke-linecap="round"/>'
        )
    parts.append(
        f'<polyline points="{polyline(list(zip(xs, ys)))}" stroke="#1050c0"/>'
    )
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
