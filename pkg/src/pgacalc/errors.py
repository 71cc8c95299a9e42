"""Exception types raised by the geometric layers."""


class GeometryError(ValueError):
    """Base class for domain errors (null lines, ideal points, coincident inputs)."""


class NullLineError(GeometryError):
    pass


class IdealPointError(GeometryError):
    pass


class DegenerateError(GeometryError):
    """A construction collapsed to zero, e.g. the join of coincident points."""
