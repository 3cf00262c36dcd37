"""Extended Euclidean plane: R^2 plus a line at infinity.

Points::

    Affine(x, y)     ordinary point of R^2
    AtInfinity(m)    common ideal point of every line of slope m (m finite)
    InfinityPoint()  common ideal point of every vertical line

Lines::

    Sloped(m, b)     {(x, m*x + b)} + {AtInfinity(m)}
    Vertical(c)      {(c, y)} + {InfinityPoint()}
    LineAtInfinity() every ideal point

A slope of infinity cannot be written down; the vertical direction has its
own tags.  Coordinates follow the scalar mode rules in :mod:`projplane.scalar`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import DegenerateInput
from .scalar import EPS, Scalar, close, coerce, from_json_scalar, to_json_scalar


def _init_scalars(obj, names):
    vals = coerce(*(getattr(obj, n) for n in names))
    for n, v in zip(names, vals):
        object.__setattr__(obj, n, v)


@dataclass(frozen=True)
class Affine:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        _init_scalars(self, ("x", "y"))


@dataclass(frozen=True)
class AtInfinity:
    m: Scalar

    def __post_init__(self):
        _init_scalars(self, ("m",))


@dataclass(frozen=True)
class InfinityPoint:
    pass


@dataclass(frozen=True)
class Sloped:
    m: Scalar
    b: Scalar

    def __post_init__(self):
        _init_scalars(self, ("m", "b"))


@dataclass(frozen=True)
class Vertical:
    c: Scalar

    def __post_init__(self):
        _init_scalars(self, ("c",))


@dataclass(frozen=True)
class LineAtInfinity:
    pass


PlanePoint = Union[Affine, AtInfinity, InfinityPoint]
PlaneLine = Union[Sloped, Vertical, LineAtInfinity]


def same_slope(m1: Scalar, m2: Scalar, eps: float = EPS) -> bool:
    """Parallel test; floating slopes are compared after scaling by max(1,|m1|,|m2|)."""
    return close(m1, m2, eps=eps)


def same_point(p: PlanePoint, q: PlanePoint, eps: float = EPS) -> bool:
    match p, q:
        case Affine(x1, y1), Affine(x2, y2):
            return close(x1, x2, eps=eps) and close(y1, y2, eps=eps)
        case AtInfinity(m1), AtInfinity(m2):
            return same_slope(m1, m2, eps)
        case InfinityPoint(), InfinityPoint():
            return True
    return False


def same_line(l1: PlaneLine, l2: PlaneLine, eps: float = EPS) -> bool:
    match l1, l2:
        case Sloped(m1, b1), Sloped(m2, b2):
            return same_slope(m1, m2, eps) and close(b1, b2, eps=eps)
        case Vertical(c1), Vertical(c2):
            return close(c1, c2, eps=eps)
        case LineAtInfinity(), LineAtInfinity():
            return True
    return False


def contains(l: PlaneLine, p: PlanePoint, eps: float = EPS) -> bool:
    """Membership of ``p`` in the point set of ``l``."""
    match l, p:
        case Sloped(m, b), Affine(x, y):
            return close(m * x + b, y, m * x, b, eps=eps)
        case Sloped(m, _), AtInfinity(m2):
            return same_slope(m, m2, eps)
        case Vertical(c), Affine(x, _):
            return close(x, c, eps=eps)
        case Vertical(), InfinityPoint():
            return True
        case LineAtInfinity(), AtInfinity() | InfinityPoint():
            return True
    return False


def join_p(p1: PlanePoint, p2: PlanePoint, eps: float = EPS) -> PlaneLine:
    """The unique line through two distinct points."""
    if same_point(p1, p2, eps):
        raise DegenerateInput(f"no unique line through {p1} and {p2}")
    match p1, p2:
        case Affine(x1, y1), Affine(x2, y2):
            if close(x1, x2, eps=eps):
                return Vertical(x1)
            m = (y2 - y1) / (x2 - x1)
            return Sloped(m, y1 - m * x1)
        case (AtInfinity() | InfinityPoint()), (AtInfinity() | InfinityPoint()):
            return LineAtInfinity()
        case (Affine(x, y), AtInfinity(m)) | (AtInfinity(m), Affine(x, y)):
            return Sloped(m, y - m * x)
        case (Affine(x, _), InfinityPoint()) | (InfinityPoint(), Affine(x, _)):
            return Vertical(x)
    raise TypeError(f"not plane points: {p1!r}, {p2!r}")


def meet_p(l1: PlaneLine, l2: PlaneLine, eps: float = EPS) -> PlanePoint:
    """The unique common point of two distinct lines."""
    if same_line(l1, l2, eps):
        raise DegenerateInput(f"no unique point on {l1} and {l2}")
    match l1, l2:
        case Sloped(m1, b1), Sloped(m2, b2):
            if same_slope(m1, m2, eps):
                return AtInfinity(m1)
            d = m1 - m2
            return Affine((b2 - b1) / d, (m1 * b2 - m2 * b1) / d)
        case (Sloped(m, b), Vertical(c)) | (Vertical(c), Sloped(m, b)):
            return Affine(c, m * c + b)
        case (Sloped(m, _), LineAtInfinity()) | (LineAtInfinity(), Sloped(m, _)):
            return AtInfinity(m)
        # distinct verticals share only the point of infinity
        case (Vertical(), Vertical()) | (Vertical(), LineAtInfinity()) | (LineAtInfinity(), Vertical()):
            return InfinityPoint()
    raise TypeError(f"not plane lines: {l1!r}, {l2!r}")


def sample_line(l: PlaneLine, ts) -> list:
    """Affine points of ``l`` at parameters ``ts`` (x for sloped, y for vertical,
    slope for the line at infinity) followed by the line's ideal point(s)."""
    match l:
        case Sloped(m, b):
            return [Affine(t, m * t + b) for t in ts] + [AtInfinity(m)]
        case Vertical(c):
            return [Affine(c, t) for t in ts] + [InfinityPoint()]
        case LineAtInfinity():
            return [AtInfinity(t) for t in ts] + [InfinityPoint()]
    raise TypeError(f"not a plane line: {l!r}")


def to_json(obj) -> dict:
    match obj:
        case Affine(x, y):
            return {"kind": "affine", "x": to_json_scalar(x), "y": to_json_scalar(y)}
        case AtInfinity(m):
            return {"kind": "at_infinity", "m": to_json_scalar(m)}
        case InfinityPoint():
            return {"kind": "infinity_point"}
        case Sloped(m, b):
            return {"kind": "sloped", "m": to_json_scalar(m), "b": to_json_scalar(b)}
        case Vertical(c):
            return {"kind": "vertical", "c": to_json_scalar(c)}
        case LineAtInfinity():
            return {"kind": "line_at_infinity"}
    raise TypeError(f"not a plane object: {obj!r}")


_KINDS = {
    "affine": (Affine, ("x", "y")),
    "at_infinity": (AtInfinity, ("m",)),
    "infinity_point": (InfinityPoint, ()),
    "sloped": (Sloped, ("m", "b")),
    "vertical": (Vertical, ("c",)),
    "line_at_infinity": (LineAtInfinity, ()),
}


def from_json(obj: dict):
    try:
        cls, fields = _KINDS[obj["kind"]]
        return cls(*(from_json_scalar(obj[f]) for f in fields))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad plane object: {obj!r}") from exc


def is_point(obj) -> bool:
    return isinstance(obj, (Affine, AtInfinity, InfinityPoint))


def is_line(obj) -> bool:
    return isinstance(obj, (Sloped, Vertical, LineAtInfinity))
