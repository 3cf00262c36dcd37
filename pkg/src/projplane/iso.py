"""Isomorphisms between the plane, hemisphere and vector-space models.

Plane to hemisphere sends an affine point at polar coordinates
``(r, alpha)`` to ``(rho, alpha, atan r)``; ideal points land on the
equator.  Plane to vector space sends ``(x, y)`` to ``span(x, y, 1)`` and
the ideal point of slope ``m`` to ``span(1, m, 0)``.  A plane line
``y = m x + b`` goes to the great circle / 2-subspace with normal
``(m, -1, b)`` in both targets, which is what makes the maps
incidence-preserving.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from . import homog, plane, sphere
from .errors import ConfigError
from .homog import HomogLine, HomogPoint
from .plane import (
    Affine,
    AtInfinity,
    InfinityPoint,
    LineAtInfinity,
    PlaneLine,
    PlanePoint,
    Sloped,
    Vertical,
)
from .scalar import EPS
from .sphere import HALF_PI, GreatSemicircle, SpherePoint, canonicalize_s

Construction = Literal["plane", "sphere", "vector"]
CONSTRUCTIONS = ("plane", "sphere", "vector")


@dataclass(frozen=True)
class IsoConfig:
    rho: float = 1.0
    epsilon: float = EPS

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho > 0):
            raise ConfigError(f"rho must be positive and finite, got {self.rho}")
        if not 0 < self.epsilon <= 1e-6:
            raise ConfigError(f"epsilon must lie in (0, 1e-6], got {self.epsilon}")


DEFAULT = IsoConfig()


# -- points ----


def azimuth(x: float, y: float) -> float:
    """Azimuth of ``(x, y)`` in (-pi/2, 3pi/2]; 0 at the origin.

    Agrees with the piecewise rule atan(y/x) for x > 0, atan(y/x) + pi for
    x < 0 and pi/2 on the positive y axis.  On the negative y axis it
    returns 3pi/2, keeping (0, y) and (0, -y) apart.
    """
    if x == 0 and y == 0:
        return 0.0
    t = math.atan2(y, x)
    return t + 2 * math.pi if t <= -HALF_PI else t


def iso_ps(p: PlanePoint, cfg: IsoConfig = DEFAULT) -> SpherePoint:
    """Plane to hemisphere.  Exact coordinates are converted to float."""
    match p:
        case Affine(x, y):
            x, y = float(x), float(y)
            return SpherePoint(cfg.rho, azimuth(x, y), math.atan(math.hypot(x, y)))
        case AtInfinity(m):
            return SpherePoint(cfg.rho, math.atan(float(m)), HALF_PI)
        case InfinityPoint():
            return SpherePoint(cfg.rho, HALF_PI, HALF_PI)
    raise TypeError(f"not a plane point: {p!r}")


def iso_ps_inv(s: SpherePoint) -> PlanePoint:
    if s.phi < HALF_PI:
        r = math.tan(s.phi)
        return Affine(r * math.cos(s.theta), r * math.sin(s.theta))
    if s.theta == HALF_PI:
        return InfinityPoint()
    return AtInfinity(math.tan(s.theta))


def iso_pv(p: PlanePoint) -> HomogPoint:
    match p:
        case Affine(x, y):
            one = Fraction(1) if isinstance(x, Fraction) else 1.0
            return HomogPoint(x, y, one)
        case AtInfinity(m):
            one, zero = (Fraction(1), Fraction(0)) if isinstance(m, Fraction) else (1.0, 0.0)
            return HomogPoint(one, m, zero)
        case InfinityPoint():
            return HomogPoint(0, 1, 0)
    raise TypeError(f"not a plane point: {p!r}")


def iso_pv_inv(h: HomogPoint) -> PlanePoint:
    x, y, z = h.coords
    if z != 0:
        return Affine(x / z, y / z)
    if x != 0:
        return AtInfinity(y / x)
    return InfinityPoint()


def iso_sv(s: SpherePoint) -> HomogPoint:
    return HomogPoint.of(s.lift())


def iso_sv_inv(h: HomogPoint, cfg: IsoConfig = DEFAULT) -> SpherePoint:
    return canonicalize_s(tuple(float(c) for c in h.coords), cfg.rho)


# -- lines ----


def line_normal_p(l: PlaneLine) -> HomogLine:
    """Normal ``(m, -1, b)`` of a sloped line, ``(1, 0, -c)`` of a vertical
    one, ``(0, 0, 1)`` of the line at infinity (canonicalized)."""
    match l:
        case Sloped(m, b):
            return HomogLine(m, -1 if isinstance(m, Fraction) else -1.0, b)
        case Vertical(c):
            return HomogLine(1 if isinstance(c, Fraction) else 1.0, 0, -c)
        case LineAtInfinity():
            return homog.LINE_AT_INFINITY
    raise TypeError(f"not a plane line: {l!r}")


def plane_line_from_normal(
    n: Union[HomogLine, GreatSemicircle], eps: float = EPS
) -> PlaneLine:
    """Inverse of :func:`line_normal_p`."""
    coords = n.normal if isinstance(n, GreatSemicircle) else n.coords
    n1, n2, n3 = coords
    if isinstance(n1, Fraction):
        zero1, zero2 = n1 == 0, n2 == 0
    else:
        scale = homog.norm(coords)
        zero1, zero2 = abs(n1) <= eps * scale, abs(n2) <= eps * scale
    if zero1 and zero2:
        return LineAtInfinity()
    if not zero2:
        return Sloped(-n1 / n2, -n3 / n2)
    return Vertical(-n3 / n1)


def _sample_check(l: PlaneLine, image, target: str, cfg: IsoConfig) -> None:
    for p in plane.sample_line(l, (-1.5, 2.0)):
        if target == "sphere":
            ok = sphere.incident_s(iso_ps(p, cfg), image, 1e-9)
        else:
            ok = homog.incident_v(iso_pv(p).to_float(), image.to_float(), 1e-9)
        assert ok, f"transport of {l} to {target} failed at {p}"


def transport_line(l: PlaneLine, target: Construction, cfg: IsoConfig = DEFAULT):
    """Image of a plane line in ``target``.

    The image is checked against sampled point images unless Python runs
    with ``-O``.
    """
    if target == "plane":
        return l
    n = line_normal_p(l)
    if target == "vector":
        image = n
    elif target == "sphere":
        image = GreatSemicircle(tuple(float(c) for c in n.coords))
    else:
        raise ValueError(f"unknown construction {target!r}")
    if __debug__:
        _sample_check(l, image, target, cfg)
    return image


# -- generic conversion ----


def convert_point(p, source: Construction, target: Construction, cfg: IsoConfig = DEFAULT):
    """Map a point between any two models, routing through the plane model
    or directly between sphere and vector space."""
    if source == target:
        return p
    match source, target:
        case "plane", "sphere":
            return iso_ps(p, cfg)
        case "plane", "vector":
            return iso_pv(p)
        case "sphere", "plane":
            return iso_ps_inv(p)
        case "vector", "plane":
            return iso_pv_inv(p)
        case "sphere", "vector":
            return iso_sv(p)
        case "vector", "sphere":
            return iso_sv_inv(p, cfg)
    raise ValueError(f"unknown conversion {source!r} -> {target!r}")
