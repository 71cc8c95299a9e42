"""Exact rational trigonometry in the plane-based geometric algebra Cl(2,0,1)."""

from .constructions import (Triangle, altitude, centroid, foot, join_points, median, meet_lines,
                            midpoint, parallel_through, perpendicular_bisector, side, signed_area2)
from .errors import DegenerateError, GeometryError, IdealPointError, NullLineError
from .geometry import (Line, Point, incident, is_ideal_point, is_null_line, line_from_abc,
                       normalize_point, point_from_xy, point_from_xyz)
from .isometry import Versor, apply, reflection, rotor, rotor_point_part, rotor_scalar_part
from .kernel import Multivector, projectively_equal
from .rtrig import (collinear, concurrent, cross, is_parallel, is_perpendicular, quadrance, spread,
                    twist)

__version__ = "0.1.0"
