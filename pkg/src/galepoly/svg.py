"""Affine diagrams of block Gale configurations as static SVG.

A configuration in R^(p-1) is reduced to an affine picture by picking a
functional c with <c, u> != 0 for every vector u and mapping u to u/<c, u>
on the affine hyperplane {x : <c, x> = 1}.  Vectors with positive <c, u>
draw as black points, negative as white points; coinciding images form a
cluster annotated with its multiplicities.  Drawable charts are one- and
two-dimensional, i.e. p - 1 in {2, 3}.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParametersError
from .linalg import QQ, dot
from .mani import BlockDiagramPlan

_MARGIN = 70.0
_SIZE = 600.0
_RADIUS = 7.0


def choose_functional(coords) -> tuple[Fraction, ...]:
    """Least t >= 1 making c = (1, t, t^2, ...) miss every vector's kernel."""
    m = len(coords[0])
    for t in range(1, 10 * len(coords) * m + 2):
        c = tuple(QQ(t) ** i for i in range(m))
        if all(dot(c, u) != 0 for u in coords):
            return c
    raise BadParametersError("no separating functional found")  # pragma: no cover


def affine_clusters(config):
    """Group vectors by their affine image.

    Returns a list of (chart_point, (black_labels, white_labels)) sorted by
    chart coordinates, where the chart drops the first coordinate of the
    affine hyperplane {<c, x> = 1}.
    """
    c = choose_functional(config.coords)
    groups: dict[tuple[Fraction, ...], tuple[list[str], list[str]]] = {}
    for lab, u in zip(config.labels, config.coords):
        s = dot(c, u)
        image = tuple(x / s for x in u)
        chart = image[1:]
        blacks, whites = groups.setdefault(chart, ([], []))
        (blacks if s > 0 else whites).append(lab)
    return sorted(groups.items())


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _scale_1d(values: list[Fraction]) -> list[float]:
    lo, hi = min(values), max(values)
    span = hi - lo
    if span == 0:
        return [_SIZE / 2 for _ in values]
    return [
        float(_MARGIN + (v - lo) / span * (_SIZE - 2 * _MARGIN)) for v in values
    ]


def _scale_2d(points: list[tuple[Fraction, Fraction]]) -> list[tuple[float, float]]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    lox, hix, loy, hiy = min(xs), max(xs), min(ys), max(ys)
    span = max(hix - lox, hiy - loy)
    if span == 0:
        return [(_SIZE / 2, _SIZE / 2) for _ in points]
    out = []
    for x, y in points:
        px = float(_MARGIN + (x - lox) / span * (_SIZE - 2 * _MARGIN))
        # SVG y grows downward; flip so the chart reads like usual axes
        py = float(_SIZE - _MARGIN - (y - loy) / span * (_SIZE - 2 * _MARGIN))
        out.append((px, py))
    return out


def _cluster_markup(px: float, py: float, blacks: list[str], whites: list[str]) -> list[str]:
    parts = []
    slots = []
    if blacks:
        slots.append(("#111111", "#111111", blacks))
    if whites:
        slots.append(("#ffffff", "#111111", whites))
    offset = -(len(slots) - 1) * _RADIUS
    for fill, stroke, labels in slots:
        cy = py + offset
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(cy)}" r="{_fmt(_RADIUS)}" '
            f'fill="{fill}" stroke="{stroke}" stroke-width="1.5"/>'
        )
        if len(labels) > 1:
            parts.append(
                f'<text x="{_fmt(px + _RADIUS + 3)}" y="{_fmt(cy + 4)}" '
                f'font-size="11">x{len(labels)}</text>'
            )
        offset += 2 * _RADIUS
    caption = ",".join(sorted(blacks)) + "|" + ",".join(sorted(whites))
    parts.append(
        f'<text x="{_fmt(px)}" y="{_fmt(py + 2 * _RADIUS + 14 + (len(slots) - 1) * _RADIUS)}" '
        f'font-size="9" text-anchor="middle">{caption}</text>'
    )
    return parts


def svg_from_plan(plan: BlockDiagramPlan) -> str:
    """Affine diagram of the plan's configuration, as an SVG document."""
    m = plan.p - 1
    if m not in (2, 3):
        raise BadParametersError(
            f"p - 1 = {m} is not drawable; affine charts exist for p - 1 in {{2, 3}}"
        )
    clusters = affine_clusters(plan.config)
    height = 260.0 if m == 2 else _SIZE
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(_SIZE)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(_SIZE)} {_fmt(height)}">',
        f'<title>affine diagram d={plan.d} p={plan.p} q={plan.q} ell={plan.ell}</title>',
        f'<text x="{_fmt(_MARGIN)}" y="24" font-size="13">'
        f"d={plan.d} p={plan.p} q={plan.q} ell={plan.ell} "
        f"({len(plan.config)} vectors, {len(clusters)} clusters)</text>",
    ]
    if m == 2:
        baseline = 130.0
        xs = _scale_1d([chart[0] for chart, _ in clusters])
        lines.append(
            f'<line x1="{_fmt(_MARGIN - 20)}" y1="{_fmt(baseline)}" '
            f'x2="{_fmt(_SIZE - _MARGIN + 20)}" y2="{_fmt(baseline)}" '
            f'stroke="#999999" stroke-width="1"/>'
        )
        for px, (_, (blacks, whites)) in zip(xs, clusters):
            lines.extend(_cluster_markup(px, baseline, blacks, whites))
    else:
        pts = _scale_2d([(chart[0], chart[1]) for chart, _ in clusters])
        for (px, py), (_, (blacks, whites)) in zip(pts, clusters):
            lines.extend(_cluster_markup(px, py, blacks, whites))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
