"""Command-line interface.

Exit codes: 0 success, 1 degenerate input or bad configuration (a JSON
object ``{"error": ..., "message": ...}`` goes to stderr), 2 usage errors.
The default sphere radius comes from ``PROJPLANE_RHO`` when ``--rho`` is
not given.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import figures, homog, iso, plane, sensor, sphere
from .errors import ConfigError, DegenerateInput
from .homog import HomogLine, HomogPoint
from .iso import CONSTRUCTIONS, IsoConfig

RHO_ENV = "PROJPLANE_RHO"


class CliError(Exception):
    """Bad argument value; reported as a usage error."""


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{what}: invalid JSON ({exc.msg})") from exc


def parse_point(model: str, text: str, cfg: IsoConfig):
    obj = _load_json(text, "point")
    try:
        if model == "plane":
            p = plane.from_json(obj)
            if not plane.is_point(p):
                raise ValueError("expected a plane point")
            return p
        if model == "sphere":
            if not isinstance(obj, dict) or "normal" in obj:
                raise ValueError("expected {rho, theta, phi}")
            return sphere.SpherePoint(obj.get("rho", cfg.rho), obj["theta"], obj["phi"])
        return homog.from_json(obj, HomogPoint)
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"point {text!r}: {exc}") from exc


def parse_line(model: str, text: str):
    obj = _load_json(text, "line")
    try:
        if model == "plane":
            l = plane.from_json(obj)
            if not plane.is_line(l):
                raise ValueError("expected a plane line")
            return l
        if model == "sphere":
            if not isinstance(obj, dict) or "normal" not in obj:
                raise ValueError('expected {"normal": [...]}')
            return sphere.GreatSemicircle(tuple(obj["normal"]))
        return homog.from_json(obj, HomogLine)
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"line {text!r}: {exc}") from exc


def encode(model: str, obj):
    if model == "plane":
        return plane.to_json(obj)
    if model == "sphere":
        return sphere.to_json(obj)
    return homog.to_json(obj)


def _config(args) -> IsoConfig:
    rho = args.rho
    if rho is None:
        env = os.environ.get(RHO_ENV)
        if env:
            try:
                rho = float(env)
            except ValueError:
                raise ConfigError(f"{RHO_ENV}={env!r} is not a number") from None
        else:
            rho = 1.0
    return IsoConfig(rho=rho)


# -- subcommands ----


def cmd_convert(args, out):
    cfg = _config(args)
    p = parse_point(args.source, args.point, cfg)
    q = iso.convert_point(p, args.source, args.target, cfg)
    print(_dumps(encode(args.target, q)), file=out)


def _join(model, a, b, cfg):
    if model == "plane":
        return plane.join_p(a, b)
    if model == "sphere":
        return sphere.join_s(a, b)
    return homog.join_v(a, b)


def _meet(model, a, b, cfg):
    if model == "plane":
        return plane.meet_p(a, b)
    if model == "sphere":
        return sphere.meet_s(a, b, cfg.rho)
    return homog.meet_v(a, b)


def cmd_join(args, out):
    cfg = _config(args)
    a, b = (parse_point(args.model, t, cfg) for t in (args.a, args.b))
    print(_dumps(encode(args.model, _join(args.model, a, b, cfg))), file=out)


def cmd_meet(args, out):
    cfg = _config(args)
    a, b = (parse_line(args.model, t) for t in (args.a, args.b))
    print(_dumps(encode(args.model, _meet(args.model, a, b, cfg))), file=out)


def cmd_map_line(args, out):
    cfg = _config(args)
    l = parse_line("plane", args.line)
    print(_dumps(encode(args.target, iso.transport_line(l, args.target, cfg))), file=out)


def cmd_figure(args, out):
    cfg = _config(args)
    if args.samples < 1:
        raise CliError("--samples must be at least 1")
    kwargs = {}
    if args.lines is not None:
        if args.name != "projection":
            raise CliError("--lines applies to the projection figure only")
        objs = _load_json(args.lines, "--lines")
        if not isinstance(objs, list):
            raise CliError("--lines must be a JSON list")
        kwargs["lines"] = [parse_line("plane", json.dumps(o)) for o in objs]
    header, rows = figures.FIGURES[args.name](args.samples, cfg, **kwargs)
    fh = open(args.out, "w", newline="") if args.out else out
    try:
        if args.svg:
            fh.write(figures.to_svg(figures.plane_polylines(args.name, rows)))
        else:
            figures.write_csv(header, rows, fh)
    finally:
        if args.out:
            fh.close()


def cmd_simulate(args, out):
    scene = _open_config(args.scene, sensor.load_scene)
    hits = sensor.simulate(scene)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            sensor.write_hits_csv(hits, fh)
    else:
        sensor.write_hits_csv(hits, out)


def _open_config(path, loader):
    try:
        return loader(path)
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror}") from exc


def _read_json_file(path):
    with open(path) as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc


def _read_hits(path):
    with open(path, newline="") as fh:
        return sensor.read_hits_csv(fh)


def cmd_reconstruct(args, out):
    hits = _open_config(args.hits, _read_hits)
    sensors = sensor.load_sensors(_open_config(args.sensors, _read_json_file))
    rec = sensor.reconstruct(hits, sensors)
    print(_dumps({"estimate": rec.estimate.tolist(), "residual": rec.residual}), file=out)


# -- parser ----


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="projplane",
        description="Real projective plane models, isomorphisms, and an ideal photosensor.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def rho_opt(sp):
        sp.add_argument("--rho", type=float, default=None,
                        help=f"sphere radius (default ${RHO_ENV} or 1)")

    c = sub.add_parser("convert", help="map a point between models")
    c.add_argument("--from", dest="source", choices=CONSTRUCTIONS, required=True)
    c.add_argument("--to", dest="target", choices=CONSTRUCTIONS, required=True)
    c.add_argument("--point", required=True, help="point as JSON")
    rho_opt(c)
    c.set_defaults(func=cmd_convert)

    for name, func, what in (("join", cmd_join, "points"), ("meet", cmd_meet, "lines")):
        j = sub.add_parser(name, help=f"{name} two {what}")
        j.add_argument("--model", choices=CONSTRUCTIONS, required=True)
        j.add_argument("a", help=f"first of the {what}, as JSON")
        j.add_argument("b", help=f"second of the {what}, as JSON")
        rho_opt(j)
        j.set_defaults(func=func)

    m = sub.add_parser("map-line", help="carry a plane line into another model")
    m.add_argument("--line", required=True, help="plane line as JSON")
    m.add_argument("--to", dest="target", choices=("sphere", "vector"), required=True)
    rho_opt(m)
    m.set_defaults(func=cmd_map_line)

    f = sub.add_parser("figure", help="emit figure point clouds as CSV")
    f.add_argument("name", choices=sorted(figures.FIGURES))
    f.add_argument("--samples", type=int, default=100)
    f.add_argument("--lines", default=None, help="JSON list of plane lines (projection)")
    f.add_argument("--svg", action="store_true", help="emit an SVG of the plane-model data")
    f.add_argument("--out", default=None)
    rho_opt(f)
    f.set_defaults(func=cmd_figure)

    s = sub.add_parser("simulate", help="simulate photon hits for a scene")
    s.add_argument("--scene", required=True)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_simulate)

    r = sub.add_parser("reconstruct", help="estimate the event position from hits")
    r.add_argument("--hits", required=True)
    r.add_argument("--sensors", required=True)
    r.set_defaults(func=cmd_reconstruct)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except CliError as exc:
        parser.print_usage(err)
        print(f"{parser.prog}: error: {exc}", file=err)
        return 2
    except (DegenerateInput, ConfigError) as exc:
        print(_dumps({"error": type(exc).__name__, "message": str(exc)}), file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
