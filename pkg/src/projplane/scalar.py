"""Scalar modes.

Two modes share every geometric predicate:

* exact  -- ``fractions.Fraction`` (ints are promoted to Fraction)
* float  -- binary64 ``float``

A group of values is exact only if every member is an int or Fraction; a
single float anywhere demotes the whole group to floating mode.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[Fraction, float]

#: default relative tolerance for floating-mode predicates
EPS = 1e-12


def is_exact_value(v) -> bool:
    return isinstance(v, Rational) and not isinstance(v, bool)


def coerce(*values) -> tuple:
    """Bring ``values`` into a common scalar mode."""
    kinds = {type(v) for v in values}
    if kinds <= {int, Fraction}:
        return tuple(v if type(v) is Fraction else Fraction(v) for v in values)
    if kinds == {float}:
        if not all(math.isfinite(v) for v in values):
            raise ValueError(f"non-finite scalar in {values!r}")
        return values
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (Rational, float)):
            # numpy scalars and other reals land here
            try:
                float(v)
            except (TypeError, ValueError):
                raise TypeError(f"not a real scalar: {v!r}") from None
    if all(is_exact_value(v) for v in values):
        return tuple(Fraction(v) for v in values)
    out = tuple(float(v) for v in values)
    for v in out:
        if not math.isfinite(v):
            raise ValueError(f"non-finite scalar: {v!r}")
    return out


def all_exact(values: Iterable) -> bool:
    return all(isinstance(v, Fraction) for v in values)


def close(a: Scalar, b: Scalar, *scale: Scalar, eps: float = EPS) -> bool:
    """``a == b`` exactly in exact mode, else ``|a-b| <= eps*max(1, |scale|...)``."""
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    ref = max([1.0, abs(float(a)), abs(float(b))] + [abs(float(s)) for s in scale])
    return abs(float(a) - float(b)) <= eps * ref


def to_json_scalar(v: Scalar):
    """Exact values become an int (if integral) or a ``[num, den]`` pair."""
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v.numerator)
        return [v.numerator, v.denominator]
    return float(v)


def from_json_scalar(obj) -> Scalar:
    if isinstance(obj, bool):
        raise ValueError(f"not a scalar: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite scalar: {obj!r}")
        return obj
    if isinstance(obj, str):
        # "3/4" or "-2"
        return Fraction(obj)
    if isinstance(obj, (list, tuple)) and len(obj) == 2 and all(
        isinstance(x, int) and not isinstance(x, bool) for x in obj
    ):
        if obj[1] == 0:
            raise ValueError("zero denominator")
        return Fraction(obj[0], obj[1])
    raise ValueError(f"not a scalar: {obj!r}")
