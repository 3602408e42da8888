"""Static SVG rendering of 2D/3D polytopes and cone fans.

Geometry stays exact until the last step; drawing coordinates are floats
formatted with fixed precision, so identical inputs give byte-identical
documents.  Three-dimensional input is orthographically projected onto a
pair of coordinate axes (default: drop the third coordinate).
"""

from __future__ import annotations

import math
from typing import Sequence

from .cones import DualConeSystem
from .errors import DomainError, NotFullDimensional
from .linalg import _CoordTuple, format_rational
from .polytope import Polytope, facets

_PALETTE = ["#4878cf", "#d65f5f", "#6acc65", "#b47cc7", "#c4ad66", "#77bedb"]

_CANVAS = 480.0
_MARGIN = 56.0


def _check_dimension(dim: int, axes: tuple[int, int]) -> None:
    if dim > 3:
        raise DomainError(
            f"rendering supports ambient dimension up to 3, got {dim}; "
            "project the data to 3 or fewer coordinates first"
        )
    if axes[0] == axes[1] or any(a < 0 or a >= max(dim, 1) for a in axes):
        raise DomainError(f"projection axes {axes} are invalid for dimension {dim}")


def _project(point: _CoordTuple, axes: tuple[int, int]) -> tuple[float, float]:
    if point.dim == 1:
        return float(point.coords[0]), 0.0
    return float(point.coords[axes[0]]), float(point.coords[axes[1]])


class _Canvas:
    """Maps data coordinates to a fixed-size SVG viewport."""

    def __init__(self, xs: Sequence[float], ys: Sequence[float]):
        self.min_x, self.max_x = min(xs), max(xs)
        self.min_y, self.max_y = min(ys), max(ys)
        span = max(self.max_x - self.min_x, self.max_y - self.min_y, 1e-9)
        self.scale = (_CANVAS - 2 * _MARGIN) / span

    def map(self, x: float, y: float) -> tuple[float, float]:
        cx = _MARGIN + (x - self.min_x) * self.scale
        cy = _CANVAS - _MARGIN - (y - self.min_y) * self.scale
        return cx, cy


def _svg_header() -> str:
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_CANVAS:.0f}" height="{_CANVAS:.0f}" '
        f'viewBox="0 0 {_CANVAS:.0f} {_CANVAS:.0f}">\n'
        f'<rect width="{_CANVAS:.0f}" height="{_CANVAS:.0f}" fill="white"/>\n'
    )


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _facet_cycle(p: Polytope, incident: Sequence[int], axes: tuple[int, int]) -> list[int]:
    """Order a facet's vertices by angle around their mean (for the outline)."""
    pts = [(_project(p.vertices[i], axes), i) for i in incident]
    cx = sum(q[0][0] for q in pts) / len(pts)
    cy = sum(q[0][1] for q in pts) / len(pts)
    pts.sort(key=lambda q: math.atan2(q[0][1] - cy, q[0][0] - cx))
    return [i for _, i in pts]


def render_polytope_svg(p: Polytope, axes: tuple[int, int] = (0, 1)) -> str:
    """Standalone SVG: facet outlines plus labeled vertices."""
    if p.ambient_dim > 1:
        _check_dimension(p.ambient_dim, axes)
    projected = [_project(v, axes) for v in p.vertices]
    canvas = _Canvas([q[0] for q in projected], [q[1] for q in projected])
    parts = [_svg_header()]

    try:
        facet_list = facets(p)
    except NotFullDimensional:
        facet_list = []
    for k, facet in enumerate(facet_list):
        cycle = _facet_cycle(p, sorted(facet.incident_vertex_indices), axes)
        coords = " ".join(
            "{},{}".format(*map(_fmt, canvas.map(*projected[i]))) for i in cycle
        )
        color = _PALETTE[k % len(_PALETTE)]
        parts.append(
            f'<polygon points="{coords}" fill="{color}" fill-opacity="0.12" '
            f'stroke="{color}" stroke-width="1.5"/>\n'
        )
    if not facet_list and len(p.vertices) > 1:
        coords = " ".join(
            "{},{}".format(*map(_fmt, canvas.map(*q))) for q in projected
        )
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="#555" stroke-width="1.5"/>\n'
        )

    for v, q in zip(p.vertices, projected):
        cx, cy = canvas.map(*q)
        parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3.5" fill="#222"/>\n')
        label = "(" + ", ".join(format_rational(c) for c in v.coords) + ")"
        parts.append(
            f'<text x="{_fmt(cx + 6)}" y="{_fmt(cy - 6)}" font-size="11" '
            f'font-family="monospace" fill="#222">{label}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def render_cones_svg(
    system: DualConeSystem, axes: tuple[int, int] = (0, 1), radius: float = 3.0
) -> str:
    """Standalone SVG of a cone fan: shaded ray bundles truncated at ``radius``."""
    dim = system.source.ambient_dim
    if dim > 1:
        _check_dimension(dim, axes)
    if radius <= 0:
        raise DomainError("truncation radius must be positive")

    ray_points: list[tuple[float, float]] = [(0.0, 0.0)]
    cone_rays: list[list[tuple[float, float]]] = []
    for cone in system.cones:
        rays = []
        for g in cone.generators:
            x, y = _project(g, axes)
            norm = math.hypot(x, y)
            if norm < 1e-12:
                continue
            pt = (x / norm * radius, y / norm * radius)
            rays.append(pt)
            ray_points.append(pt)
        rays.sort(key=lambda q: math.atan2(q[1], q[0]))
        cone_rays.append(rays)

    canvas = _Canvas([q[0] for q in ray_points], [q[1] for q in ray_points])
    parts = [_svg_header()]
    origin = canvas.map(0.0, 0.0)

    for k, rays in enumerate(cone_rays):
        if not rays:
            continue
        color = _PALETTE[k % len(_PALETTE)]
        points = [origin] + [canvas.map(*q) for q in rays]
        coords = " ".join("{},{}".format(*map(_fmt, q)) for q in points)
        parts.append(
            f'<polygon points="{coords}" fill="{color}" fill-opacity="0.18" stroke="none"/>\n'
        )
        for q in rays:
            ex, ey = canvas.map(*q)
            parts.append(
                f'<line x1="{_fmt(origin[0])}" y1="{_fmt(origin[1])}" '
                f'x2="{_fmt(ex)}" y2="{_fmt(ey)}" stroke="{color}" stroke-width="2"/>\n'
            )
        label = str(system.cones[k].label)
        lx = sum(canvas.map(*q)[0] for q in rays) / len(rays)
        ly = sum(canvas.map(*q)[1] for q in rays) / len(rays)
        parts.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
            f'font-family="monospace" fill="#222">Q{label}</text>\n'
        )
    parts.append(
        f'<circle cx="{_fmt(origin[0])}" cy="{_fmt(origin[1])}" r="3" fill="#222"/>\n'
    )
    parts.append("</svg>\n")
    return "".join(parts)
