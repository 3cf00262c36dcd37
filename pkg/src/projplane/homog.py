"""Vector-space model of the real projective plane.

Points are 1-dimensional subspaces of R^3 and lines are 2-dimensional
subspaces, both stored as a nonzero triple up to scale.  A line is kept as
its normal ``n`` (the plane ``{v : n.v = 0}``), so join and meet are each a
single cross product.

Canonical forms make projective equality plain component equality:

* exact mode: the last nonzero coordinate is scaled to 1
* float mode: unit Euclidean norm, first nonzero coordinate positive
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DegenerateInput
from .scalar import EPS, coerce, from_json_scalar, to_json_scalar

# components below this (relative to a unit vector) do not decide the sign
SIGN_EPS = 1e-12


def cross(a: Sequence, b: Sequence) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def dot(a: Sequence, b: Sequence):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def norm(a: Sequence) -> float:
    return math.sqrt(float(a[0]) ** 2 + float(a[1]) ** 2 + float(a[2]) ** 2)


def det3(a: Sequence, b: Sequence, c: Sequence):
    return dot(a, cross(b, c))


def canonical_float(v: Sequence[float]) -> tuple:
    """Unit vector with its first significant component positive."""
    n = math.hypot(*v)
    if n == 0.0:
        raise DegenerateInput("zero triple")
    u = [float(c) / n for c in v]
    for c in u:
        if abs(c) > SIGN_EPS:
            if c < 0:
                u = [-x for x in u]
            break
    return tuple(x + 0.0 for x in u)  # drop -0.0


def canonical_exact(v: Sequence[Fraction]) -> tuple:
    return _canonical_ints(_integer_multiple(v))


def _canonical_ints(v: Sequence[int]) -> tuple:
    # same result as canonical_exact, for an integer triple
    for c in reversed(v):
        if c:
            return tuple(Fraction(x, c) for x in v)
    raise DegenerateInput("zero triple")


def _integer_multiple(v: Sequence[Fraction]) -> tuple:
    """An integer triple proportional to an exact one."""
    den = math.lcm(*(c.denominator for c in v))
    return tuple(c.numerator * (den // c.denominator) for c in v)


_INT_TYPES = {int}
_EXACT_TYPES = {int, Fraction}


class _Triple:
    __slots__ = ("coords", "_ints")

    def __init__(self, x, y, z):
        kinds = {type(x), type(y), type(z)}
        if kinds <= _INT_TYPES:
            canon = _canonical_ints((x, y, z))
        elif kinds <= _EXACT_TYPES:
            canon = canonical_exact((x, y, z))
        else:
            vals = coerce(x, y, z)
            if isinstance(vals[0], Fraction):
                canon = canonical_exact(vals)
            else:
                canon = canonical_float(vals)
        object.__setattr__(self, "coords", canon)
        object.__setattr__(self, "_ints", None)

    def integers(self) -> tuple:
        """Integer triple spanning the same subspace (exact mode only)."""
        if self._ints is None:
            object.__setattr__(self, "_ints", _integer_multiple(self.coords))
        return self._ints

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def of(cls, v: Sequence):
        return cls(v[0], v[1], v[2])

    @property
    def exact(self) -> bool:
        return isinstance(self.coords[0], Fraction)

    def to_float(self):
        return type(self)(*(float(c) for c in self.coords))

    def to_exact(self):
        """Exact copy; floats convert to their exact binary value."""
        return type(self)(*(Fraction(c) for c in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coords)
        return f"{type(self).__name__}({body})"


class HomogPoint(_Triple):
    """A point ``span(v)``, ``v != 0``."""

    __slots__ = ()


class HomogLine(_Triple):
    """A line, given by the normal of its 2-dimensional subspace."""

    __slots__ = ()


#: the line at infinity z = 0
LINE_AT_INFINITY = HomogLine(0, 0, 1)


def _is_exact(*items: _Triple) -> bool:
    return all(it.exact for it in items)


def _float_coords(t: _Triple) -> tuple:
    return tuple(float(c) for c in t.coords)


def _parallel(a: _Triple, b: _Triple, eps: float) -> bool:
    if _is_exact(a, b):
        return a.coords == b.coords
    u, v = _float_coords(a), _float_coords(b)
    return norm(cross(u, v)) <= eps * norm(u) * norm(v)


def equivalent(a: _Triple, b: _Triple, eps: float = EPS) -> bool:
    """Projective equality: the cross product of the triples vanishes.

    Exact when both operands are exact, otherwise relative to ``eps``.
    Mixed exact/float comparisons fall back to floating mode.
    """
    return _parallel(a, b, eps)


def join_v(p: HomogPoint, q: HomogPoint, eps: float = EPS) -> HomogLine:
    """Line through two distinct points."""
    if _parallel(p, q, eps):
        raise DegenerateInput(f"no unique line through {p} and {q}")
    if _is_exact(p, q):
        return HomogLine.of(cross(p.integers(), q.integers()))
    return HomogLine.of(cross(_float_coords(p), _float_coords(q)))


def meet_v(l: HomogLine, m: HomogLine, eps: float = EPS) -> HomogPoint:
    """Common point of two distinct lines."""
    if _parallel(l, m, eps):
        raise DegenerateInput(f"no unique point on {l} and {m}")
    if _is_exact(l, m):
        return HomogPoint.of(cross(l.integers(), m.integers()))
    return HomogPoint.of(cross(_float_coords(l), _float_coords(m)))


def incident_v(p: HomogPoint, l: HomogLine, eps: float = EPS) -> bool:
    """``n.p == 0`` exactly, or ``|n.p| <= eps*|n|*|p|`` in floating mode."""
    if _is_exact(p, l):
        return dot(p.integers(), l.integers()) == 0
    u, n = _float_coords(p), _float_coords(l)
    return abs(dot(u, n)) <= eps * norm(u) * norm(n)


def collinear(p: HomogPoint, q: HomogPoint, r: HomogPoint, eps: float = EPS) -> bool:
    if _is_exact(p, q, r):
        return det3(p.integers(), q.integers(), r.integers()) == 0
    a, b, c = _float_coords(p), _float_coords(q), _float_coords(r)
    return abs(det3(a, b, c)) <= eps * norm(a) * norm(b) * norm(c)


def quadrilateral_check(points: Sequence[HomogPoint], eps: float = EPS) -> bool:
    """True iff no three of the four points are collinear.

    Raises DegenerateInput if two of the points coincide projectively.
    """
    if len(points) != 4:
        raise ValueError(f"expected 4 points, got {len(points)}")
    for a, b in combinations(points, 2):
        if _parallel(a, b, eps):
            raise DegenerateInput(f"repeated point {a}")
    return not any(collinear(a, b, c, eps) for a, b, c in combinations(points, 3))


def to_json(t: _Triple) -> list:
    return [to_json_scalar(c) for c in t.coords]


def from_json(obj, cls=HomogPoint):
    if not isinstance(obj, (list, tuple)) or len(obj) != 3:
        raise ValueError(f"expected a triple, got {obj!r}")
    return cls(*(from_json_scalar(c) for c in obj))
