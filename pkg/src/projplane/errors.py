"""Exception types shared across the package."""


class DegenerateInput(ValueError):
    """Raised when an operation has no unique answer for its inputs.

    Typical cases: joining a point with itself, meeting a line with itself,
    or asking for a quadrilateral with a repeated vertex.
    """


class DegenerateGeometry(DegenerateInput):
    """Raised when a reconstruction system is singular (e.g. all rays parallel)."""


class ConfigError(ValueError):
    """Raised for invalid configuration or scene descriptions."""
