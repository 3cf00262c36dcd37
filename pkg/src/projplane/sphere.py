"""Hemisphere model of radius rho.

The model keeps one representative from every antipodal pair ``{v, -v}``:
the open upper hemisphere ``z > 0`` plus half of the equator.  Boundary
conventions:

* azimuth ``theta`` lives in ``(-pi/2, 3pi/2]``
* on the equator (``phi == pi/2``) it is restricted to ``(-pi/2, pi/2]``, so
  ``(0, rho, 0)`` belongs to the model and ``(0, -rho, 0)`` does not
* at the pole (``phi == 0``) ``theta`` is 0

Lines are great semicircles, stored by a unit normal whose first
significant component is positive.  The equator has normal ``(0, 0, 1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateInput
from . import homog
from .homog import canonical_float, cross, dot, norm
from .scalar import EPS

HALF_PI = math.pi / 2
TWO_PI = 2 * math.pi


def _fold_azimuth(theta: float) -> float:
    """Shift ``theta`` by multiples of 2pi into (-pi/2, 3pi/2]."""
    t = math.fmod(theta, TWO_PI)
    if t <= -HALF_PI:
        t += TWO_PI
    elif t > 3 * HALF_PI:
        t -= TWO_PI
    return t


def _equator_azimuth(theta: float) -> float:
    # theta already folded; returns the representative in (-pi/2, pi/2]
    return theta - math.pi if theta > HALF_PI else theta


@dataclass(frozen=True)
class SpherePoint:
    """Canonical hemisphere representative ``(rho, theta, phi)``.

    Any angles are accepted and reduced: ``phi`` in ``[0, pi]`` (a lower
    hemisphere ``phi`` is replaced by its antipode) and ``theta`` folded
    as described in the module docstring.
    """

    rho: float
    theta: float
    phi: float

    def __post_init__(self):
        rho, theta, phi = float(self.rho), float(self.theta), float(self.phi)
        if not all(math.isfinite(v) for v in (rho, theta, phi)):
            raise ValueError("non-finite spherical coordinates")
        if rho <= 0:
            raise ValueError(f"rho must be positive, got {rho}")
        if not 0.0 <= phi <= math.pi:
            raise ValueError(f"phi must lie in [0, pi], got {phi}")
        if phi > HALF_PI:
            phi = math.pi - phi
            theta += math.pi
        theta = _fold_azimuth(theta)
        if phi == HALF_PI:
            theta = _equator_azimuth(theta)
        if phi == 0.0:
            theta = 0.0
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "theta", theta + 0.0)
        object.__setattr__(self, "phi", phi)

    def lift(self) -> tuple:
        """Cartesian coordinates on the sphere of radius rho."""
        sp = math.sin(self.phi)
        return (
            self.rho * sp * math.cos(self.theta),
            self.rho * sp * math.sin(self.theta),
            self.rho * math.cos(self.phi),
        )

    @property
    def on_equator(self) -> bool:
        return self.phi == HALF_PI


@dataclass(frozen=True)
class GreatSemicircle:
    """Great semicircle ``{s : n.s = 0}`` with canonical unit normal ``n``."""

    normal: tuple

    def __post_init__(self):
        v = tuple(float(c) for c in self.normal)
        if len(v) != 3 or not all(math.isfinite(c) for c in v):
            raise ValueError(f"bad normal {self.normal!r}")
        object.__setattr__(self, "normal", canonical_float(v))


#: the equator
EQUATOR = GreatSemicircle((0.0, 0.0, 1.0))


def canonicalize_s(v: Sequence[float], rho: float = 1.0) -> SpherePoint:
    """Representative of ``{v, -v}`` on the hemisphere of radius ``rho``."""
    x, y, z = (float(c) for c in v)
    if x == 0.0 and y == 0.0 and z == 0.0:
        raise DegenerateInput("zero vector has no direction")
    if z < 0:
        x, y, z = -x, -y, -z
    if x == 0.0 and y == 0.0:
        return SpherePoint(rho, 0.0, 0.0)
    phi = math.atan2(math.hypot(x, y), z)
    if phi >= HALF_PI:
        # equator: take the half with theta in (-pi/2, pi/2]
        if x < 0 or (x == 0.0 and y < 0):
            x, y = -x, -y
        return SpherePoint(rho, math.atan2(y, x), HALF_PI)
    return SpherePoint(rho, math.atan2(y, x), phi)


def incident_s(p: SpherePoint, l: GreatSemicircle, eps: float = EPS) -> bool:
    """``|n.s| <= eps*rho`` for the Cartesian lift ``s`` of ``p``."""
    return abs(dot(l.normal, p.lift())) <= eps * p.rho


def join_s(p: SpherePoint, q: SpherePoint, eps: float = EPS) -> GreatSemicircle:
    a, b = p.lift(), q.lift()
    c = cross(a, b)
    if norm(c) <= eps * norm(a) * norm(b):
        raise DegenerateInput(f"no unique great semicircle through {p} and {q}")
    return GreatSemicircle(c)


def meet_s(
    l1: GreatSemicircle, l2: GreatSemicircle, rho: float = 1.0, eps: float = EPS
) -> SpherePoint:
    c = cross(l1.normal, l2.normal)
    if norm(c) <= eps:
        raise DegenerateInput(f"{l1} and {l2} are the same great semicircle")
    return canonicalize_s(c, rho)


def angular_distance(p: SpherePoint, q: SpherePoint) -> float:
    """Angle between the directions of ``p`` and ``q``, ignoring orientation
    (antipodes are at distance 0)."""
    a, b = p.lift(), q.lift()
    return math.atan2(norm(cross(a, b)), abs(dot(a, b)))


def quadrilateral_check(points: Sequence[SpherePoint], eps: float = EPS) -> bool:
    return homog.quadrilateral_check([homog.HomogPoint.of(p.lift()) for p in points], eps)


def to_json(obj) -> dict:
    if isinstance(obj, SpherePoint):
        return {"rho": obj.rho, "theta": obj.theta, "phi": obj.phi}
    if isinstance(obj, GreatSemicircle):
        return {"normal": list(obj.normal)}
    raise TypeError(f"not a sphere object: {obj!r}")


def from_json(obj: dict):
    try:
        if "normal" in obj:
            return GreatSemicircle(tuple(obj["normal"]))
        return SpherePoint(obj.get("rho", 1.0), obj["theta"], obj["phi"])
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"bad sphere object: {obj!r}") from exc
