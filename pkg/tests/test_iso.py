import math
import random
from fractions import Fraction

import pytest

from projplane import homog, plane
from projplane.errors import ConfigError
from projplane.homog import HomogLine, HomogPoint
from projplane.iso import (
    IsoConfig,
    azimuth,
    convert_point,
    iso_ps,
    iso_ps_inv,
    iso_pv,
    iso_pv_inv,
    iso_sv,
    iso_sv_inv,
    line_normal_p,
    plane_line_from_normal,
    transport_line,
)
from projplane.plane import Affine, AtInfinity, InfinityPoint, LineAtInfinity, Sloped, Vertical
from projplane.sphere import SpherePoint, angular_distance, incident_s

import _gen

PI = math.pi
R2 = IsoConfig(rho=2.0)


def test_config_validation():
    with pytest.raises(ConfigError):
        IsoConfig(rho=0)
    with pytest.raises(ConfigError):
        IsoConfig(epsilon=1e-3)


def test_iso_ps_examples():
    assert iso_ps(Affine(0, 0), R2) == SpherePoint(2.0, 0, 0)
    p = iso_ps(Affine(1, 0))
    assert (p.rho, p.theta) == (1.0, 0.0)
    assert p.phi == pytest.approx(PI / 4, abs=1e-16)
    assert iso_ps(InfinityPoint(), R2) == SpherePoint(2.0, PI / 2, PI / 2)
    assert iso_ps(AtInfinity(1)).theta == pytest.approx(PI / 4)
    assert iso_ps(AtInfinity(-1)).phi == PI / 2


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (2.0, 1.0, math.atan(1 / 2)),  # x > 0: atan(y/x)
        (2.0, -3.0, math.atan(-3 / 2)),
        (-2.0, 1.0, math.atan(1 / -2) + PI),  # x < 0: atan(y/x) + pi
        (-2.0, -3.0, math.atan(-3 / -2) + PI),
        (0.0, 4.0, PI / 2),  # x = 0, y > 0
        (0.0, -4.0, 3 * PI / 2),  # x = 0, y < 0: kept apart from (0, 4)
    ],
)
def test_azimuth_branches(x, y, expected):
    assert azimuth(x, y) == pytest.approx(expected, abs=1e-15)
    assert iso_ps(Affine(x, y)).theta == pytest.approx(expected, abs=1e-15)


def test_polar_angle_is_atan_of_radius():
    for x, y in ((3.0, 4.0), (-1.0, 0.5), (0.0, -8.0)):
        assert iso_ps(Affine(x, y)).phi == pytest.approx(math.atan(math.hypot(x, y)), abs=1e-15)


def test_iso_ps_inv_examples():
    assert iso_ps_inv(SpherePoint(1, 0, 0)) == Affine(0.0, 0.0)
    at = iso_ps_inv(SpherePoint(1, PI / 4, PI / 2))
    assert isinstance(at, AtInfinity) and at.m == pytest.approx(1.0)
    assert iso_ps_inv(SpherePoint(1, PI / 2, PI / 2)) == InfinityPoint()


def test_iso_pv_examples():
    assert iso_pv(Affine(2, 3)) == HomogPoint(2, 3, 1)
    assert iso_pv(AtInfinity(5)) == HomogPoint(1, 5, 0)
    assert iso_pv(InfinityPoint()) == HomogPoint(0, 1, 0)
    assert iso_pv(Affine(2, 3)).coords == (2, 3, 1)


def test_iso_pv_inv_examples():
    assert iso_pv_inv(HomogPoint(4, 6, 2)) == Affine(2, 3)
    assert iso_pv_inv(HomogPoint(2, 10, 0)) == AtInfinity(5)
    assert iso_pv_inv(HomogPoint(0, -3, 0)) == InfinityPoint()


def test_iso_sv_examples():
    assert homog.equivalent(iso_sv(SpherePoint(1, 0, PI / 2)), HomogPoint(1, 0, 0))
    # lift of (1, pi/4, atan sqrt2) is (1,1,1)/sqrt3
    assert homog.equivalent(iso_sv(iso_ps(Affine(1, 1))), HomogPoint(1, 1, 1))
    assert iso_sv(SpherePoint(3, 0, 0)) == HomogPoint(0.0, 0.0, 1.0)
    assert iso_sv_inv(HomogPoint(0, 0, -2), R2) == SpherePoint(2, 0, 0)


def test_line_normal_examples():
    assert line_normal_p(Sloped(1.0, 0.0)).coords == pytest.approx((2 ** -0.5, -(2 ** -0.5), 0))
    assert line_normal_p(Vertical(0.0)).coords == (1.0, 0.0, 0.0)
    n = line_normal_p(Vertical(2.0)).coords
    assert n == pytest.approx((1 / math.sqrt(5), 0, -2 / math.sqrt(5)))
    assert line_normal_p(LineAtInfinity()) == homog.LINE_AT_INFINITY
    # exact lines keep exact normals
    assert line_normal_p(Sloped(Fraction(1, 2), 3)) == HomogLine(1, -2, 6)


def test_vertical_normal_by_incidence():
    # the plane must contain (2, y, 1) for all y and the vertical direction (0, 1, 0)
    n = line_normal_p(Vertical(2))
    for y in (-3, 0, 5):
        assert homog.incident_v(HomogPoint(2, y, 1), n)
    assert homog.incident_v(HomogPoint(0, 1, 0), n)


def test_transport_examples():
    assert transport_line(Sloped(0.0, 0.0), "sphere").normal == (0.0, 1.0, 0.0)
    assert transport_line(LineAtInfinity(), "vector") == HomogLine(0, 0, 1)
    v = transport_line(Vertical(1.0), "vector")
    assert v.coords == pytest.approx((2 ** -0.5, 0, -(2 ** -0.5)))
    assert transport_line(Sloped(2, 1), "plane") == Sloped(2, 1)
    with pytest.raises(ValueError):
        transport_line(Sloped(2, 1), "torus")


def test_plane_line_from_normal_inverts_line_normal():
    lines = [Sloped(2, 1), Sloped(Fraction(-1, 3), 0), Vertical(4), LineAtInfinity(),
             Sloped(0.5, -2.0), Vertical(-1.5)]
    for l in lines:
        assert plane.same_line(plane_line_from_normal(line_normal_p(l)), l, 1e-12)
        s = transport_line(l, "sphere")
        assert plane.same_line(plane_line_from_normal(s), l, 1e-12)


def test_convert_point_routes():
    p = Affine(0.5, -2.0)
    s = convert_point(p, "plane", "sphere")
    v = convert_point(s, "sphere", "vector")
    assert homog.equivalent(v, iso_pv(p))
    back = convert_point(convert_point(v, "vector", "sphere"), "sphere", "plane")
    assert plane.same_point(back, p, 1e-12)
    assert convert_point(p, "plane", "plane") is p


# -- properties ----


def test_round_trips():
    rng = random.Random(5)
    for _ in range(5000):
        exact = rng.random() < 0.5
        p = _gen.plane_point(rng, exact)
        back = iso_pv_inv(iso_pv(p))
        if exact:
            assert back == p
        else:
            assert type(back) is type(p) and plane.same_point(back, p, 1e-9)
        q = iso_ps_inv(iso_ps(p, R2))
        assert type(q) is type(p)
        assert plane.same_point(q, p, 1e-9)


def test_ideal_round_trip_through_sphere():
    for m in (-1e5, -3.0, 0.0, 0.25, 7.0):
        q = iso_ps_inv(iso_ps(AtInfinity(m)))
        assert isinstance(q, AtInfinity) and q.m == pytest.approx(m, rel=1e-9)


@pytest.mark.parametrize("kind", _gen.LINE_KINDS)
def test_incidence_preserved(kind):
    rng = random.Random(_gen.LINE_KINDS.index(kind))
    for _ in range(1000):
        l = _gen.line_of_kind(rng, kind)
        p = _gen.point_on(rng, l)
        assert plane.contains(l, p)
        assert incident_s(iso_ps(p, R2), transport_line(l, "sphere", R2), 1e-9)
        assert homog.incident_v(iso_pv(p), transport_line(l, "vector"), 1e-9)


def test_incidence_preserved_exactly_in_vector_space():
    rng = random.Random(21)
    for _ in range(1000):
        l = _gen.line_of_kind(rng, rng.choice(_gen.LINE_KINDS), exact=True)
        p = _gen.point_on(rng, l, exact=True)
        assert homog.incident_v(iso_pv(p), transport_line(l, "vector"))


def test_normal_annihilates_image():
    # s = iso_ps(x, m x + b) satisfies m s1 - s2 + b s3 = 0
    rng = random.Random(8)
    for _ in range(1000):
        m, b, x = rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-50, 50)
        s1, s2, s3 = iso_ps(Affine(x, m * x + b)).lift()
        assert abs(m * s1 - s2 + b * s3) <= 1e-12 * math.sqrt(m * m + 1 + b * b)


def test_commutativity_vector_is_span_of_sphere_image():
    rng = random.Random(9)
    pts = [InfinityPoint(), AtInfinity(0.0), AtInfinity(-2.5), Affine(0.0, 0.0), Affine(0.0, -3.0)]
    pts += [_gen.plane_point(rng, False) for _ in range(3000)]
    for p in pts:
        assert homog.equivalent(iso_pv(p), iso_sv(iso_ps(p, R2)), 1e-9)


def test_continuity_at_infinity():
    rng = random.Random(4)
    for _ in range(100):
        m, b = rng.uniform(-5, 5), rng.uniform(-5, 5)
        x = 1e8
        d = angular_distance(iso_ps(Affine(x, m * x + b)), iso_ps(AtInfinity(m)))
        assert d < 1e-7


def test_circles_and_rays_map_to_parallels_and_meridians():
    for r in (0.1, 1.0, 3.0, 40.0):
        for k in range(16):
            a = -PI / 2 + (k + 1) * 2 * PI / 16
            s = iso_ps(Affine(r * math.cos(a), r * math.sin(a)))
            assert s.phi == pytest.approx(math.atan(r), abs=1e-12)
            assert s.theta == pytest.approx(a, abs=1e-12)


def test_injective_on_random_sample():
    rng = random.Random(10)
    pts = {_gen.plane_point(rng, False) for _ in range(10000)}
    images = {iso_ps(p) for p in pts}
    assert len(images) == len(pts)
    for p in pts:
        assert plane.same_point(iso_ps_inv(iso_ps(p)), p, 1e-9)
