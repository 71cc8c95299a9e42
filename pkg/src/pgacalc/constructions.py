"""Ruler-style constructions and the triangle apparatus."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .errors import DegenerateError, IdealPointError, NullLineError
from .geometry import Line, Point, is_null_line, normalize_point


def _proper(p: Point, what: str = "point") -> None:
    if p.weight == 0:
        raise IdealPointError(f"{what} {p!r} is ideal; a proper point is required")


def _non_null(line: Line) -> None:
    if is_null_line(line):
        raise NullLineError(f"{line!r} is a null line")


def join_points(p: Point, q: Point) -> Line:
    mv = kernel.join(p.mv, q.mv)
    if mv.is_zero():
        raise DegenerateError(f"{p!r} and {q!r} coincide; their join is undefined")
    return Line(mv)


def meet_lines(l: Line, m: Line) -> Point:
    """Intersection point; ideal (weight 0) when the lines are parallel."""
    mv = kernel.wedge(l.mv, m.mv)
    if mv.is_zero():
        raise DegenerateError(f"{l!r} and {m!r} coincide; their meet is undefined")
    return Point(mv)


def altitude(p: Point, line: Line) -> Line:
    """Line through ``p`` perpendicular to ``line``: the dot ``P . l``."""
    _non_null(line)
    _proper(p)
    return Line(kernel.lowest_grade_dot(p.mv, line.mv))


def parallel_through(p: Point, line: Line) -> Line:
    """``<P (P . l)>_1``, the line through ``p`` parallel to ``line``."""
    perp = altitude(p, line)
    return Line(kernel.grade_part(kernel.geometric_product(p.mv, perp.mv), 1))


def foot(p: Point, line: Line) -> Point:
    return Point(kernel.wedge(line.mv, altitude(p, line).mv))


def midpoint(p: Point, q: Point) -> Point:
    """Sum of the normalized points (weight 2)."""
    _proper(p)
    _proper(q)
    return Point(normalize_point(p).mv + normalize_point(q).mv)


def perpendicular_bisector(p: Point, q: Point) -> Line:
    mid = midpoint(p, q)
    pn, qn = normalize_point(p), normalize_point(q)
    joining = kernel.join(pn.mv, qn.mv)
    if joining.is_zero():
        raise DegenerateError("perpendicular bisector of coincident points is undefined")
    return Line(kernel.lowest_grade_dot(joining, mid.mv))


def signed_area2(p: Point, q: Point, r: Point) -> Fraction:
    """Twice the signed area, the triple join of the normalized vertices.

    Positive for counterclockwise vertex order.
    """
    for v in (p, q, r):
        _proper(v, "vertex")
    p, q, r = (normalize_point(v) for v in (p, q, r))
    return kernel.join(kernel.join(p.mv, q.mv), r.mv).scalar_part()


_CYCLIC = {1: (2, 3), 2: (3, 1), 3: (1, 2)}


def cyclic(i: int) -> tuple[int, int]:
    """The indices (j, k) completing i to a cyclic permutation of (1, 2, 3)."""
    try:
        return _CYCLIC[i]
    except KeyError:
        raise ValueError(f"triangle index must be 1, 2 or 3, got {i!r}") from None


@dataclass(frozen=True)
class Triangle:
    """Three weight-1 vertices A1, A2, A3.

    Collinear or repeated vertices are rejected unless ``degenerate=True``.
    """

    A1: Point
    A2: Point
    A3: Point
    degenerate: bool = False

    def __post_init__(self):
        for name in ("A1", "A2", "A3"):
            v = getattr(self, name)
            _proper(v, "vertex")
            object.__setattr__(self, name, normalize_point(v))
        if not self.degenerate and self.area2() == 0:
            raise DegenerateError("triangle vertices are collinear or repeated")

    def vertex(self, i: int) -> Point:
        cyclic(i)
        return (self.A1, self.A2, self.A3)[i - 1]

    def area2(self) -> Fraction:
        return signed_area2(self.A1, self.A2, self.A3)


def side(t: Triangle, i: int) -> Line:
    """a_i = A_j v A_k."""
    j, k = cyclic(i)
    return join_points(t.vertex(j), t.vertex(k))


def median(t: Triangle, i: int) -> Line:
    """m_i = (A_j + A_k) v A_i."""
    j, k = cyclic(i)
    mv = kernel.join(t.vertex(j).mv + t.vertex(k).mv, t.vertex(i).mv)
    if mv.is_zero():
        raise DegenerateError(f"median {i} is undefined: vertex {i} is the midpoint of the opposite side")
    return Line(mv)


def centroid(t: Triangle) -> Point:
    if t.area2() == 0:
        raise DegenerateError("centroid of a degenerate triangle is undefined")
    return normalize_point(Point(t.A1.mv + t.A2.mv + t.A3.mv))
