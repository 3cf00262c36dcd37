"""Real projective plane: three models, the isomorphisms between them, and an
ideal direction-sensitive photosensor built on the plane/vector-space map."""

from .errors import ConfigError, DegenerateGeometry, DegenerateInput
from .homog import HomogLine, HomogPoint, incident_v, join_v, meet_v, quadrilateral_check
from .iso import (
    IsoConfig,
    iso_ps,
    iso_ps_inv,
    iso_pv,
    iso_pv_inv,
    iso_sv,
    iso_sv_inv,
    line_normal_p,
    transport_line,
)
from .plane import (
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
from .sphere import GreatSemicircle, SpherePoint, canonicalize_s, incident_s, join_s, meet_s

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "DegenerateGeometry", "DegenerateInput",
    "HomogLine", "HomogPoint", "incident_v", "join_v", "meet_v", "quadrilateral_check",
    "IsoConfig", "iso_ps", "iso_ps_inv", "iso_pv", "iso_pv_inv", "iso_sv", "iso_sv_inv",
    "line_normal_p", "transport_line",
    "Affine", "AtInfinity", "InfinityPoint", "LineAtInfinity", "Sloped", "Vertical",
    "contains", "join_p", "meet_p",
    "GreatSemicircle", "SpherePoint", "canonicalize_s", "incident_s", "join_s", "meet_s",
]
