"""Quadrance, spread, cross, twist and the incidence/orientation predicates.

Everything here is a quotient of squares in the algebra, so results stay exact
and are invariant under rescaling of the homogeneous inputs.  Predicates are
exact zero tests; there is no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from . import kernel
from .errors import IdealPointError, NullLineError
from .geometry import Line, Point, is_null_line


def _square_scalar(mv) -> Fraction:
    return kernel.square(mv).scalar_part()


def _check_non_null(*lines: Line) -> None:
    for line in lines:
        if is_null_line(line):
            raise NullLineError(f"{line!r} is a null line; metric quantities are undefined")


def quadrance(p: Point, q: Point) -> Fraction:
    """Squared distance ``(P v Q)^2 / (P^2 Q^2)``; accepts unnormalized points."""
    for pt in (p, q):
        if pt.weight == 0:
            raise IdealPointError(f"quadrance is undefined for ideal point {pt!r}")
    num = _square_scalar(kernel.join(p.mv, q.mv))
    return num / (_square_scalar(p.mv) * _square_scalar(q.mv))


def spread(l: Line, m: Line) -> Fraction:
    _check_non_null(l, m)
    return -_square_scalar(kernel.wedge(l.mv, m.mv)) / (_square_scalar(l.mv) * _square_scalar(m.mv))


def dot_scalar(l: Line, m: Line) -> Fraction:
    return kernel.lowest_grade_dot(l.mv, m.mv).scalar_part()


def cross(l: Line, m: Line) -> Fraction:
    _check_non_null(l, m)
    return dot_scalar(l, m) ** 2 / (_square_scalar(l.mv) * _square_scalar(m.mv))


def twist(l: Line, m: Line) -> Fraction:
    _check_non_null(l, m)
    d = dot_scalar(l, m)
    if d == 0:
        raise ZeroDivisionError("twist is undefined for perpendicular lines (l.m = 0)")
    return -_square_scalar(kernel.wedge(l.mv, m.mv)) / d ** 2


def is_parallel(l: Line, m: Line) -> bool:
    return _square_scalar(kernel.wedge(l.mv, m.mv)) == 0


def is_perpendicular(l: Line, m: Line) -> bool:
    return dot_scalar(l, m) == 0


def collinear(p: Point, q: Point, r: Point) -> bool:
    return kernel.join(kernel.join(p.mv, q.mv), r.mv).is_zero()


def concurrent(l: Line, m: Line, n: Line) -> bool:
    return kernel.wedge(kernel.wedge(l.mv, m.mv), n.mv).is_zero()
