"""Point clouds for the construction, meridian and projection figures.

Every generator returns ``(header, rows)``; rows are tuples whose floats are
written with ``repr`` so the CSV round-trips bit-for-bit.
"""
from __future__ import annotations

import csv
import math
from typing import Iterable, Sequence

from . import iso, plane
from .homog import cross, norm
from .iso import IsoConfig
from .plane import Affine, AtInfinity, LineAtInfinity, Sloped, Vertical

CIRCLE_RADII = (0.25, 0.5, 1.0, 2.0, 4.0)
RAY_ANGLES = tuple(k * math.pi / 4 for k in range(-1, 7))
RAY_LENGTH = 10.0
PROJECTION_EXTENT = 10.0

DEFAULT_PROJECTION_LINES = (
    Sloped(0.5, -1.0),
    Sloped(0.5, 0.0),
    Sloped(0.5, 1.0),
    Sloped(-2.0, 0.5),
    Vertical(1.0),
)

CONSTRUCTION_SLOPES = (-1.0, 0.5, 3.0)
CONSTRUCTION_INTERCEPTS = (-1.0, 0.0, 1.0)
CONSTRUCTION_EXTENT = 3.0
# the two points / lines drawn in the sphere and vector panels
CONSTRUCTION_POINTS = (Affine(1.0, 0.5), Affine(-1.0, 1.0))
CONSTRUCTION_LINES = (Sloped(0.5, 1.0), Sloped(-1.0, 0.5))


def _linspace(a: float, b: float, n: int) -> list:
    if n == 1:
        return [a]
    return [a + (b - a) * j / (n - 1) for j in range(n)]


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(header: Sequence[str], rows: Iterable[tuple], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])


# -- constant-r circles and constant-alpha rays ----

MERIDIAN_HEADER = ("family", "param", "r", "alpha", "x", "y", "s1", "s2", "s3", "theta", "phi")


def meridians(samples: int = 100, cfg: IsoConfig = iso.DEFAULT):
    rows = []
    # alpha over (-pi/2, 3pi/2]
    alphas = [-math.pi / 2 + 2 * math.pi * (j + 1) / samples for j in range(samples)]
    for r in CIRCLE_RADII:
        for a in alphas:
            rows.append(_meridian_row("circle", r, r, a, cfg))
    radii = [RAY_LENGTH * (j + 1) / samples for j in range(samples)]
    for a in RAY_ANGLES:
        for r in radii:
            rows.append(_meridian_row("ray", a, r, a, cfg))
    return MERIDIAN_HEADER, rows


def _meridian_row(family, param, r, a, cfg):
    x, y = r * math.cos(a), r * math.sin(a)
    s = iso.iso_ps(Affine(x, y), cfg)
    return (family, param, r, a, x, y, *s.lift(), s.theta, s.phi)


# -- plane lines and their hemisphere images ----

PROJECTION_HEADER = (
    "line_id", "kind", "n1", "n2", "n3", "point_kind",
    "x", "y", "s1", "s2", "s3", "proj_x", "proj_y",
)


def raw_normal(l) -> tuple:
    """Unscaled normal: (m, -1, b), (1, 0, -c) or (0, 0, 1)."""
    match l:
        case Sloped(m, b):
            return (float(m), -1.0, float(b))
        case Vertical(c):
            return (1.0, 0.0, -float(c))
        case LineAtInfinity():
            return (0.0, 0.0, 1.0)
    raise TypeError(f"not a plane line: {l!r}")


def projection(samples: int = 100, cfg: IsoConfig = iso.DEFAULT, lines=DEFAULT_PROJECTION_LINES):
    rows = []
    ts = _linspace(-PROJECTION_EXTENT, PROJECTION_EXTENT, samples)
    for k, l in enumerate(lines):
        kind = plane.to_json(l)["kind"]
        n = raw_normal(l)
        for p in plane.sample_line(l, ts):
            s = iso.iso_ps(p, cfg)
            s1, s2, s3 = s.lift()
            if isinstance(p, Affine):
                pk, x, y = "affine", float(p.x), float(p.y)
            else:
                pk = "at_infinity" if isinstance(p, AtInfinity) else "infinity_point"
                x = y = None
            rows.append((k, kind, *n, pk, x, y, s1, s2, s3, s1, s2))
    return PROJECTION_HEADER, rows


# -- the three models side by side ----

CONSTRUCTION_HEADER = ("panel", "element", "group", "index", "x", "y", "z")


def _semicircle_basis(n):
    """Orthonormal (e1, e2) spanning the plane normal to n with e2_z >= 0."""
    e1 = cross(n, (0.0, 0.0, 1.0))
    if norm(e1) < 1e-12:
        e1 = (1.0, 0.0, 0.0)
    k = norm(e1)
    e1 = tuple(c / k for c in e1)
    e2 = cross(n, e1)
    k = norm(e2)
    e2 = tuple(c / k for c in e2)
    if e2[2] < 0:
        e2 = tuple(-c for c in e2)
    return e1, e2


def constructions(samples: int = 100, cfg: IsoConfig = iso.DEFAULT):
    rows = []
    rho = cfg.rho
    xs = _linspace(-CONSTRUCTION_EXTENT, CONSTRUCTION_EXTENT, samples)
    for g, m in enumerate(CONSTRUCTION_SLOPES):
        for b in CONSTRUCTION_INTERCEPTS:
            for i, x in enumerate(xs):
                rows.append(("plane", "line", g, i, x, m * x + b, 0.0))
        # label position: where the group heads off to its ideal point
        rows.append(("plane", "ideal_point", g, m, None, None, None))

    ts = _linspace(0.0, math.pi, samples)
    for g, l in enumerate(CONSTRUCTION_LINES):
        n = iso.transport_line(l, "sphere", cfg).normal
        e1, e2 = _semicircle_basis(n)
        for i, t in enumerate(ts):
            c, s = math.cos(t), math.sin(t)
            rows.append(("sphere", "semicircle", g, i,
                         *(rho * (c * a + s * b) for a, b in zip(e1, e2))))
        rows.append(("sphere", "normal", g, 0, 0.0, 0.0, 0.0))
        rows.append(("sphere", "normal", g, 1, *(rho * c for c in n)))
        for i, (a, b) in enumerate(((1, 1), (-1, 1), (-1, -1), (1, -1))):
            rows.append(("sphere", "plane", g, i,
                         *(rho * (a * u + b * v) for u, v in zip(e1, e2))))

    ss = _linspace(-1.0, 1.0, samples)
    vs = [tuple(float(c) for c in iso.iso_pv(p).coords) for p in CONSTRUCTION_POINTS]
    for g, v in enumerate(vs):
        for i, t in enumerate(ss):
            rows.append(("vector", "subspace", 0, g * samples + i, *(t * c for c in v)))
    for i, (a, b) in enumerate(((1, 1), (-1, 1), (-1, -1), (1, -1))):
        rows.append(("vector", "plane", 0, i, *(a * p + b * q for p, q in zip(*vs))))
    return CONSTRUCTION_HEADER, rows


FIGURES = {
    "constructions": constructions,
    "meridians": meridians,
    "projection": projection,
}


# -- SVG of the plane-model data ----


def plane_polylines(name: str, rows) -> list:
    """Polylines (lists of (x, y)) of a figure's plane-model rows."""
    groups: dict = {}
    if name == "constructions":
        # one polyline per line: each run restarts at index 0
        lines, cur = [], []
        for panel, element, g, i, x, y, _ in rows:
            if panel != "plane" or element != "line":
                continue
            if i == 0 and cur:
                lines.append(cur)
                cur = []
            cur.append((x, y))
        if cur:
            lines.append(cur)
        return lines
    if name == "meridians":
        for fam, param, r, a, x, y, *_ in rows:
            groups.setdefault((fam, param), []).append((x, y))
        return list(groups.values())
    if name == "projection":
        for row in rows:
            if row[5] == "affine":
                groups.setdefault(row[0], []).append((row[6], row[7]))
        return list(groups.values())
    raise ValueError(f"unknown figure {name!r}")


def to_svg(polylines, size: int = 400, extent: float = 10.0) -> str:
    """Minimal static SVG; coordinates are clipped to [-extent, extent]."""
    scale = size / (2 * extent)
    colours = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<line x1="0" y1="{size / 2}" x2="{size}" y2="{size / 2}" stroke="#999"/>',
        f'<line x1="{size / 2}" y1="0" x2="{size / 2}" y2="{size}" stroke="#999"/>',
    ]
    for k, pts in enumerate(polylines):
        coords = []
        for x, y in pts:
            if abs(x) > extent or abs(y) > extent:
                continue
            coords.append(f"{(x + extent) * scale:.3f},{(extent - y) * scale:.3f}")
        if len(coords) > 1:
            out.append(
                f'<polyline fill="none" stroke="{colours[k % len(colours)]}" '
                f'points="{" ".join(coords)}"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
