"""Deterministic SVG figures for rank-2 systems: positive roots drawn as
plane vectors from the symmetrized inner product, colored by residue class,
with a legend of class sizes and rigidity verdicts.

Output is byte-stable for a fixed input: fixed float formatting, no
timestamps, no randomness.
"""

from __future__ import annotations

import math

from .errors import FlagtopError
from .homotopy import rigidity_report
from .isotropy import residue_classes
from .roots import RootSystem, dual_system
from .weyl import ThetaSubset, theta_of

# matplotlib 'tab10' hex palette: stable, readable on white.
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)
ZERO_COLOR = "#b0b0b0"

_W, _H = 560, 640
_CX, _CY, _RADIUS = 280.0, 250.0, 185.0


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _embedding(system: RootSystem) -> tuple[tuple[float, float], tuple[float, float]]:
    """Euclidean images of the two simple roots, from the exact Gram matrix."""
    g = system.gram
    l1 = math.sqrt(float(g[0][0]))
    l2 = math.sqrt(float(g[1][1]))
    cos = float(g[0][1]) / (l1 * l2)
    sin = math.sqrt(max(0.0, 1.0 - cos * cos))
    return (l1, 0.0), (l2 * cos, l2 * sin)


def render_figure(system: RootSystem, theta: ThetaSubset, dual: bool = False) -> str:
    """SVG 1.1 document showing the positive roots colored by residue class."""
    if system.rank != 2:
        raise FlagtopError(f"figures are drawn for rank 2 only, not {system.kind}")
    theta = theta_of(system, theta)
    shown = system
    label = str(system.kind)
    if dual:
        shown = dual_system(system)
        theta = ThetaSubset(theta.indices, shown.rank)
        label = f"{system.kind} dual"
    decomposition = residue_classes(shown, theta)
    reports = rigidity_report(shown, theta)
    e1, e2 = _embedding(shown)

    def embed(root):
        return (
            root[0] * e1[0] + root[1] * e2[0],
            root[0] * e1[1] + root[1] * e2[1],
        )

    points = {r: embed(r) for r in shown.positive_roots}
    longest = max(math.hypot(*p) for p in points.values())
    scale = _RADIUS / longest

    def place(p):
        return (_CX + scale * p[0], _CY - scale * p[1])

    color_of: dict[tuple, str] = {}
    legend: list[tuple[str, str]] = []
    for root in decomposition.zero_class.members:
        color_of[root] = ZERO_COLOR
    if decomposition.zero_class.members:
        legend.append((ZERO_COLOR, f"isotropy roots: {decomposition.zero_class.size}"))
    for idx, cls in enumerate(decomposition.nonzero_classes):
        color = PALETTE[idx % len(PALETTE)]
        for root in cls.members:
            color_of[root] = color
        report = reports[idx]
        lengths = "/".join(sorted(lc.value for lc in cls.lengths_present))
        legend.append(
            (
                color,
                f"class {cls.representative}: size {cls.size}, {lengths}, "
                f"rigid {'yes' if report.theta_rigid else 'no'}",
            )
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="#ffffff"/>',
        f'<text x="20" y="28" font-family="monospace" font-size="16">'
        f"{label}, theta {theta.display()}</text>",
        # faint axes through the origin
        f'<line x1="{_fmt(_CX - _RADIUS - 20)}" y1="{_fmt(_CY)}" x2="{_fmt(_CX + _RADIUS + 20)}" '
        f'y2="{_fmt(_CY)}" stroke="#e0e0e0" stroke-width="1"/>',
        f'<line x1="{_fmt(_CX)}" y1="{_fmt(_CY - _RADIUS - 20)}" x2="{_fmt(_CX)}" '
        f'y2="{_fmt(_CY + _RADIUS + 20)}" stroke="#e0e0e0" stroke-width="1"/>',
    ]
    for root in shown.positive_roots:
        x, y = place(points[root])
        color = color_of[root]
        lines.append(
            f'<line x1="{_fmt(_CX)}" y1="{_fmt(_CY)}" x2="{_fmt(x)}" y2="{_fmt(y)}" '
            f'stroke="{color}" stroke-width="2.5"/>'
        )
        lines.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="5" fill="{color}"/>')
        label_x, label_y = _CX + (x - _CX) * 1.09, _CY + (y - _CY) * 1.09
        lines.append(
            f'<text x="{_fmt(label_x)}" y="{_fmt(label_y)}" font-family="monospace" '
            f'font-size="11" text-anchor="middle">{root}</text>'
        )
    y0 = int(_CY + _RADIUS + 55)
    for i, (color, text) in enumerate(legend):
        y = y0 + 20 * i
        lines.append(f'<rect x="20" y="{y - 10}" width="12" height="12" fill="{color}"/>')
        lines.append(
            f'<text x="40" y="{y}" font-family="monospace" font-size="12">{text}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
