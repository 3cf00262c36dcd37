import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from projplane import homog, plane
from projplane.errors import DegenerateInput
from projplane.iso import iso_pv, line_normal_p
from projplane.plane import (
    Affine,
    AtInfinity,
    InfinityPoint,
    LineAtInfinity,
    Sloped,
    Vertical,
    contains,
    join_p,
    meet_p,
)

import _gen


def test_contains_examples():
    assert contains(Sloped(2, 1), Affine(1, 3))
    assert contains(Sloped(2, 1), AtInfinity(2))
    assert not contains(Vertical(5), AtInfinity(0))
    assert contains(Vertical(5), InfinityPoint())
    assert contains(Vertical(5), Affine(5, -7))
    assert not contains(Sloped(2, 1), InfinityPoint())
    assert contains(LineAtInfinity(), AtInfinity(-3))
    assert contains(LineAtInfinity(), InfinityPoint())
    assert not contains(LineAtInfinity(), Affine(0, 0))


def test_contains_float_tolerance():
    assert contains(Sloped(0.1, 0.2), Affine(3.0, 0.1 * 3.0 + 0.2))
    assert not contains(Sloped(0.1, 0.2), Affine(3.0, 0.5 + 1e-6))


def test_join_examples():
    assert join_p(Affine(0, 0), Affine(2, 2)) == Sloped(1, 0)
    assert join_p(Affine(3, 1), InfinityPoint()) == Vertical(3)
    assert join_p(AtInfinity(0), InfinityPoint()) == LineAtInfinity()


def test_join_cases():
    # point-slope form: slope (5-1)/(3-1) = 2, intercept 1 - 2*1 = -1
    assert join_p(Affine(1, 1), Affine(3, 5)) == Sloped(2, -1)
    assert join_p(Affine(2, 1), Affine(2, 9)) == Vertical(2)
    assert join_p(AtInfinity(1), AtInfinity(4)) == LineAtInfinity()
    # through (1, 2) with slope 3: b = 2 - 3 = -1
    assert join_p(Affine(1, 2), AtInfinity(3)) == Sloped(3, -1)
    assert join_p(AtInfinity(3), Affine(1, 2)) == Sloped(3, -1)
    assert join_p(InfinityPoint(), Affine(-4, 0)) == Vertical(-4)


@pytest.mark.parametrize(
    "p",
    [Affine(1, 2), AtInfinity(Fraction(1, 3)), InfinityPoint(), Affine(0.5, 0.25)],
)
def test_join_same_point_is_degenerate(p):
    with pytest.raises(DegenerateInput):
        join_p(p, p)


def test_meet_examples():
    # x = (2-0)/(1+1) = 1, y = (1*2 - (-1)*0)/2 = 1
    assert meet_p(Sloped(1, 0), Sloped(-1, 2)) == Affine(1, 1)
    assert meet_p(Sloped(3, 5), LineAtInfinity()) == AtInfinity(3)
    assert meet_p(Vertical(1), Vertical(2)) == InfinityPoint()


def test_meet_cases():
    assert meet_p(Sloped(2, 1), Vertical(3)) == Affine(3, 7)
    assert meet_p(Vertical(3), Sloped(2, 1)) == Affine(3, 7)
    assert meet_p(Sloped(2, 1), Sloped(2, -4)) == AtInfinity(2)
    assert meet_p(Vertical(-1), LineAtInfinity()) == InfinityPoint()
    assert meet_p(LineAtInfinity(), Sloped(-5, 0)) == AtInfinity(-5)


@pytest.mark.parametrize("l", [Sloped(1, 2), Vertical(0), LineAtInfinity(), Sloped(0.5, 0.1)])
def test_meet_same_line_is_degenerate(l):
    with pytest.raises(DegenerateInput):
        meet_p(l, l)


def test_infinite_slope_is_not_representable():
    with pytest.raises(ValueError):
        AtInfinity(float("inf"))
    with pytest.raises(ValueError):
        Sloped(float("nan"), 0.0)


def test_scalar_modes():
    p = Affine(1, Fraction(1, 2))
    assert isinstance(p.x, Fraction)
    q = Affine(1, 0.5)
    assert isinstance(q.x, float)
    # exact and float points with the same value compare equal as numbers
    assert p == q


def test_json_round_trip():
    objs = [
        Affine(2, 3),
        Affine(Fraction(1, 3), -1),
        Affine(0.25, -1.5),
        AtInfinity(5),
        InfinityPoint(),
        Sloped(1, 0),
        Vertical(2.5),
        LineAtInfinity(),
    ]
    for o in objs:
        assert plane.from_json(plane.to_json(o)) == o
    assert plane.to_json(Affine(2, 3)) == {"kind": "affine", "x": 2, "y": 3}
    assert plane.to_json(AtInfinity(Fraction(1, 3))) == {"kind": "at_infinity", "m": [1, 3]}
    with pytest.raises(ValueError):
        plane.from_json({"kind": "circle"})


def test_unit_square_quadrilateral_passes():
    pts = [iso_pv(Affine(x, y)) for x, y in ((0, 0), (1, 0), (0, 1), (1, 1))]
    assert homog.quadrilateral_check(pts)


# -- properties ----

rat = st.fractions(min_value=-100, max_value=100, max_denominator=30)


@st.composite
def points(draw):
    kind = draw(st.sampled_from(["affine", "at_infinity", "infinity_point"]))
    if kind == "affine":
        return Affine(draw(rat), draw(rat))
    if kind == "at_infinity":
        return AtInfinity(draw(rat))
    return InfinityPoint()


@st.composite
def lines(draw):
    kind = draw(st.sampled_from(["sloped", "vertical", "line_at_infinity"]))
    if kind == "sloped":
        return Sloped(draw(rat), draw(rat))
    if kind == "vertical":
        return Vertical(draw(rat))
    return LineAtInfinity()


@given(points(), points())
def test_join_contains_both(p, q):
    assume(p != q)
    l = join_p(p, q)
    assert contains(l, p) and contains(l, q)


@given(lines(), lines())
def test_meet_lies_on_both(l1, l2):
    assume(l1 != l2)
    p = meet_p(l1, l2)
    assert contains(l1, p) and contains(l2, p)


@pytest.mark.parametrize("exact", [True, False])
@pytest.mark.parametrize("case", _gen.JOIN_CASES)
def test_join_matches_cross_product(case, exact):
    rng = random.Random(10 * _gen.JOIN_CASES.index(case) + exact)
    for _ in range(200):
        p, q = _gen.join_case(rng, exact, case)
        got = line_normal_p(join_p(p, q))
        want = homog.join_v(iso_pv(p), iso_pv(q))
        if exact:
            assert got == want
        else:
            assert max(abs(a - b) for a, b in zip(got, want.to_float())) <= 1e-9


@pytest.mark.parametrize("exact", [True, False])
@pytest.mark.parametrize("case", _gen.MEET_CASES)
def test_meet_matches_cross_product(case, exact):
    rng = random.Random(100 + 10 * _gen.MEET_CASES.index(case) + exact)
    for _ in range(200):
        l1, l2 = _gen.meet_case(rng, exact, case)
        got = iso_pv(meet_p(l1, l2))
        want = homog.meet_v(line_normal_p(l1), line_normal_p(l2))
        if exact:
            assert got == want
        else:
            assert max(abs(a - b) for a, b in zip(got, want.to_float())) <= 1e-9
