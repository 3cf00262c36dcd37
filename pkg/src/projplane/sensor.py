"""Ideal direction-sensitive photosensor.

A sensor is a thin ideal lens of radius ``lens_radius`` centred at
``position`` with its image plane one focal length behind it.  The lens
sends a photon arriving from direction ``d`` (sensor frame, pointing from
the sensor back toward the source, ``d_z > 0`` in front) to

    (u, v) = f * (d_x / d_z, d_y / d_z)

which is dehomogenization of ``d`` scaled by ``f``.  The hit depends only
on the direction, so parallel photons land on the same spot wherever they
cross the lens.

Orientation matrices hold the sensor axes as columns: ``u`` axis, ``v``
axis, and the optical axis, which points out of the sensor toward the
scene.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import ConfigError, DegenerateGeometry

DEFAULT_APERTURE = math.radians(60.0)
DEFAULT_LENS_RADIUS = 0.01

#: identifies the sampling algorithm; bump when the photon stream changes
RNG_VERSION = "pcg64/inverse-cdf/1"

CSV_HEADER = ("photon_id", "sensor_id", "u", "v")


def _frame_from_axis(axis) -> np.ndarray:
    w = np.asarray(axis, dtype=float)
    n = np.linalg.norm(w)
    if not n > 0:
        raise ConfigError("optical axis must be nonzero")
    w = w / n
    helper = np.array([1.0, 0.0, 0.0]) if abs(w[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    u = np.cross(helper, w)
    u /= np.linalg.norm(u)
    v = np.cross(w, u)
    return np.column_stack([u, v, w])


@dataclass(frozen=True, eq=False)
class SensorPose:
    position: np.ndarray
    orientation: np.ndarray
    focal_length: float
    aperture_half_angle: float = DEFAULT_APERTURE
    lens_radius: float = DEFAULT_LENS_RADIUS

    def __post_init__(self):
        pos = np.asarray(self.position, dtype=float).reshape(-1)
        rot = np.asarray(self.orientation, dtype=float)
        if pos.shape != (3,) or not np.all(np.isfinite(pos)):
            raise ConfigError(f"sensor position must be a finite 3-vector, got {self.position!r}")
        if rot.shape != (3, 3) or not np.all(np.isfinite(rot)):
            raise ConfigError("orientation must be a finite 3x3 matrix")
        if np.max(np.abs(rot.T @ rot - np.eye(3))) > 1e-12:
            raise ConfigError("orientation columns are not orthonormal")
        if not (math.isfinite(self.focal_length) and self.focal_length > 0):
            raise ConfigError(f"focal length must be positive, got {self.focal_length}")
        if not 0 < self.aperture_half_angle < math.pi / 2:
            raise ConfigError("aperture half-angle must lie in (0, pi/2)")
        if not (math.isfinite(self.lens_radius) and self.lens_radius >= 0):
            raise ConfigError("lens radius must be non-negative")
        pos.setflags(write=False)
        rot = rot.copy()
        rot.setflags(write=False)
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "orientation", rot)
        object.__setattr__(self, "focal_length", float(self.focal_length))
        object.__setattr__(self, "aperture_half_angle", float(self.aperture_half_angle))
        object.__setattr__(self, "lens_radius", float(self.lens_radius))

    @classmethod
    def facing(cls, position, target, focal_length: float = 1.0, **kwargs) -> "SensorPose":
        """Sensor at ``position`` whose optical axis points at ``target``."""
        axis = np.asarray(target, dtype=float) - np.asarray(position, dtype=float)
        return cls(position, _frame_from_axis(axis), focal_length, **kwargs)

    @property
    def axis(self) -> np.ndarray:
        return self.orientation[:, 2]

    @property
    def max_radius(self) -> float:
        """Largest in-aperture distance from the image centre."""
        return self.focal_length * math.tan(self.aperture_half_angle)


@dataclass(frozen=True)
class PhotonHit:
    photon_id: int
    sensor_id: int
    u: float
    v: float
    true_direction: Optional[tuple] = field(default=None, compare=False)


@dataclass(frozen=True, eq=False)
class SensorScene:
    event_position: np.ndarray
    sensors: tuple
    photon_count: int
    rng_seed: int = 0

    def __post_init__(self):
        ev = np.asarray(self.event_position, dtype=float).reshape(-1)
        if ev.shape != (3,) or not np.all(np.isfinite(ev)):
            raise ConfigError("event position must be a finite 3-vector")
        if not self.sensors:
            raise ConfigError("scene needs at least one sensor")
        if isinstance(self.photon_count, bool) or not isinstance(self.photon_count, (int, np.integer)):
            raise ConfigError("photon_count must be an integer")
        if self.photon_count < 1:
            raise ConfigError("photon_count must be at least 1")
        if not 0 <= int(self.rng_seed) < 2**64:
            raise ConfigError("rng_seed must fit in 64 bits")
        ev.setflags(write=False)
        object.__setattr__(self, "event_position", ev)
        object.__setattr__(self, "sensors", tuple(self.sensors))
        object.__setattr__(self, "photon_count", int(self.photon_count))
        object.__setattr__(self, "rng_seed", int(self.rng_seed))


# -- lens map ----


def direction_to_plane(d, f: float, aperture_half_angle: float = DEFAULT_APERTURE):
    """Image-plane position of a photon arriving from unit direction ``d``.

    Returns ``(u, v)``, or ``None`` when ``d`` is outside the field of view.
    """
    dx, dy, dz = (float(c) for c in d)
    if not dz > math.cos(aperture_half_angle):
        return None
    return (f * dx / dz, f * dy / dz)


def plane_to_direction(u: float, v: float, f: float) -> tuple:
    n = math.sqrt(u * u + v * v + f * f)
    return (u / n, v / n, f / n)


def directions_to_plane(d: np.ndarray, f: float, aperture_half_angle: float = DEFAULT_APERTURE):
    """Vectorized :func:`direction_to_plane` over an ``(N, 3)`` array.

    Returns ``(uv, mask)`` where ``uv`` holds rows for the accepted directions.
    """
    d = np.asarray(d, dtype=float)
    mask = d[:, 2] > math.cos(aperture_half_angle)
    dd = d[mask]
    uv = f * dd[:, :2] / dd[:, 2:3]
    return uv, mask


# -- photon transport ----


def sample_isotropic(n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` uniform directions on the unit sphere (inverse CDF in cos(polar), azimuth)."""
    u = rng.random((n, 2))
    cos_t = 1.0 - 2.0 * u[:, 0]
    sin_t = np.sqrt(np.maximum(0.0, 1.0 - cos_t * cos_t))
    az = 2.0 * np.pi * u[:, 1]
    return np.column_stack([sin_t * np.cos(az), sin_t * np.sin(az), cos_t])


def _detect(origins: np.ndarray, travel: np.ndarray, sensor: SensorPose):
    """Mask of photons crossing the lens disk, and their (u, v)."""
    a = sensor.axis
    denom = travel @ a
    with np.errstate(divide="ignore", invalid="ignore"):
        s = ((sensor.position - origins) @ a) / denom
    # travelling into the sensor face from the front
    ok = (denom < 0) & (s > 0)
    cross_pt = origins + s[:, None] * travel
    dist = np.linalg.norm(cross_pt - sensor.position, axis=1)
    ok &= dist <= sensor.lens_radius
    local = (-travel) @ sensor.orientation
    uv, in_fov = directions_to_plane(local, sensor.focal_length, sensor.aperture_half_angle)
    full_uv = np.full((len(travel), 2), np.nan)
    full_uv[in_fov] = uv
    return ok & in_fov, full_uv


def photon_hit(sensor: SensorPose, origin, direction, photon_id: int = 0, sensor_id: int = 0):
    """Single-photon transport; ``None`` if the photon misses the sensor."""
    t = np.asarray(direction, dtype=float)
    t = t / np.linalg.norm(t)
    ok, uv = _detect(np.asarray(origin, dtype=float)[None, :], t[None, :], sensor)
    if not ok[0]:
        return None
    return PhotonHit(photon_id, sensor_id, float(uv[0, 0]), float(uv[0, 1]), tuple(t))


def directions_toward(event, sensors: Sequence[SensorPose]) -> np.ndarray:
    """Unit directions from ``event`` to each sensor centre (chief rays)."""
    d = np.array([s.position for s in sensors]) - np.asarray(event, dtype=float)
    return d / np.linalg.norm(d, axis=1, keepdims=True)


def simulate(scene: SensorScene, directions: Optional[np.ndarray] = None) -> list:
    """Emit photons isotropically from the event and record lens hits.

    ``directions`` overrides sampling with explicit travel directions (one
    photon each); ``photon_count`` and the seed are then ignored.  Hits are
    ordered by (photon id, sensor id).
    """
    if directions is None:
        rng = np.random.Generator(np.random.PCG64(scene.rng_seed))
        travel = sample_isotropic(scene.photon_count, rng)
    else:
        travel = np.asarray(directions, dtype=float).reshape(-1, 3)
        travel = travel / np.linalg.norm(travel, axis=1, keepdims=True)
    origins = np.broadcast_to(scene.event_position, travel.shape)

    pid, sid, uu, vv = [], [], [], []
    for k, sensor in enumerate(scene.sensors):
        ok, uv = _detect(origins, travel, sensor)
        idx = np.nonzero(ok)[0]
        pid.append(idx)
        sid.append(np.full(len(idx), k))
        uu.append(uv[idx, 0])
        vv.append(uv[idx, 1])
    pid, sid = np.concatenate(pid), np.concatenate(sid)
    uu, vv = np.concatenate(uu), np.concatenate(vv)
    order = np.lexsort((sid, pid))
    return [
        PhotonHit(int(pid[i]), int(sid[i]), float(uu[i]), float(vv[i]), tuple(travel[pid[i]]))
        for i in order
    ]


def jitter(hits: Iterable[PhotonHit], sigma: float, seed: int = 0) -> list:
    """Copy of ``hits`` with independent Gaussian noise of std ``sigma`` on u and v."""
    hits = list(hits)
    rng = np.random.Generator(np.random.PCG64(seed))
    noise = rng.normal(0.0, sigma, size=(len(hits), 2))
    return [
        PhotonHit(h.photon_id, h.sensor_id, h.u + float(du), h.v + float(dv), h.true_direction)
        for h, (du, dv) in zip(hits, noise)
    ]


# -- reconstruction ----


@dataclass(frozen=True, eq=False)
class Reconstruction:
    estimate: np.ndarray
    residual: float  # RMS distance from the estimate to the back-projected rays


def back_project(hit: PhotonHit, sensor: SensorPose):
    """World-frame ray ``(origin, unit direction)`` toward the photon's source."""
    d_local = np.array(plane_to_direction(hit.u, hit.v, sensor.focal_length))
    return sensor.position, sensor.orientation @ d_local


def closest_point_to_rays(origins: np.ndarray, dirs: np.ndarray, rcond: float = 1e-10):
    """Least-squares point for lines ``origins[i] + t*dirs[i]`` (unit ``dirs``)."""
    eye = np.eye(3)
    proj = eye[None, :, :] - dirs[:, :, None] * dirs[:, None, :]
    a = proj.sum(axis=0)
    b = np.einsum("nij,nj->i", proj, origins)
    w = np.linalg.eigvalsh(a)
    if w[0] <= rcond * max(w[-1], 1.0):
        raise DegenerateGeometry("rays are (nearly) parallel; intersection is undetermined")
    x = np.linalg.solve(a, b)
    off = np.einsum("nij,nj->ni", proj, x[None, :] - origins)
    return x, float(np.sqrt(np.mean(np.sum(off * off, axis=1))))


def reconstruct(hits: Sequence[PhotonHit], sensors: Sequence[SensorPose]) -> Reconstruction:
    """Event position from hits, as the point nearest all back-projected rays."""
    if len(hits) < 2:
        raise DegenerateGeometry(f"need at least 2 hits, got {len(hits)}")
    origins, dirs = [], []
    for h in hits:
        try:
            sensor = sensors[h.sensor_id]
        except IndexError:
            raise ConfigError(f"hit refers to unknown sensor {h.sensor_id}") from None
        o, d = back_project(h, sensor)
        origins.append(o)
        dirs.append(d)
    x, res = closest_point_to_rays(np.array(origins), np.array(dirs))
    return Reconstruction(x, res)


# -- I/O ----


def sensor_from_dict(obj: dict) -> SensorPose:
    try:
        extra = {}
        if "aperture_half_angle" in obj:
            extra["aperture_half_angle"] = float(obj["aperture_half_angle"])
        if "lens_radius" in obj:
            extra["lens_radius"] = float(obj["lens_radius"])
        f = float(obj["focal_length"])
        if "orientation" in obj:
            rot = np.array(obj["orientation"], dtype=float).T
            return SensorPose(obj["position"], rot, f, **extra)
        if "axis" in obj:
            return SensorPose(obj["position"], _frame_from_axis(obj["axis"]), f, **extra)
        if "look_at" in obj:
            return SensorPose.facing(obj["position"], obj["look_at"], f, **extra)
        raise ConfigError("sensor needs one of 'orientation', 'axis' or 'look_at'")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad sensor description: {exc}") from exc


def sensor_to_dict(s: SensorPose) -> dict:
    return {
        "position": s.position.tolist(),
        "orientation": s.orientation.T.tolist(),
        "focal_length": s.focal_length,
        "aperture_half_angle": s.aperture_half_angle,
        "lens_radius": s.lens_radius,
    }


def load_sensors(obj) -> list:
    """Sensor list from a JSON list or from a scene-shaped dict."""
    if isinstance(obj, dict):
        obj = obj.get("sensors")
    if not isinstance(obj, list):
        raise ConfigError("expected a list of sensors")
    return [sensor_from_dict(s) for s in obj]


def scene_from_dict(obj: dict) -> SensorScene:
    if not isinstance(obj, dict):
        raise ConfigError("scene must be a JSON object")
    try:
        return SensorScene(
            event_position=obj["event_position"],
            sensors=load_sensors(obj),
            photon_count=obj["photon_count"],
            rng_seed=obj.get("rng_seed", 0),
        )
    except KeyError as exc:
        raise ConfigError(f"scene is missing {exc}") from exc
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad scene: {exc}") from exc


def scene_to_dict(scene: SensorScene) -> dict:
    return {
        "event_position": scene.event_position.tolist(),
        "sensors": [sensor_to_dict(s) for s in scene.sensors],
        "photon_count": scene.photon_count,
        "rng_seed": scene.rng_seed,
    }


def load_scene(path) -> SensorScene:
    with open(path) as fh:
        try:
            return scene_from_dict(json.load(fh))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc


def write_hits_csv(hits: Iterable[PhotonHit], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for h in hits:
        w.writerow((h.photon_id, h.sensor_id, repr(h.u), repr(h.v)))


def read_hits_csv(fh) -> list:
    reader = csv.DictReader(fh)
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ConfigError(f"hits CSV header must be {','.join(CSV_HEADER)}")
    try:
        return [
            PhotonHit(int(r["photon_id"]), int(r["sensor_id"]), float(r["u"]), float(r["v"]))
            for r in reader
        ]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad hits CSV row: {exc}") from exc
