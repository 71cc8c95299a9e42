"""Points and lines as typed views over grade-2 / grade-1 multivectors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernel
from .errors import IdealPointError
from .kernel import Multivector
from .scalar import as_rational


def _require_grade(mv: Multivector, grade: int, what: str) -> None:
    if not isinstance(mv, Multivector):
        raise TypeError(f"{what} wraps a Multivector, got {type(mv).__name__}")
    extra = mv.grades() - {grade}
    if extra:
        raise TypeError(f"{what} must be a pure grade-{grade} element, found grades {sorted(extra)}")
    if mv.is_zero():
        raise ValueError(f"{what} cannot be zero")


@dataclass(frozen=True)
class Line:
    """Line ax + by + c = 0, stored as ``c e0 + a e1 + b e2``. Never normalized."""

    mv: Multivector

    def __post_init__(self):
        _require_grade(self.mv, 1, "Line")

    @property
    def a(self) -> Fraction:
        return self.mv["e1"]

    @property
    def b(self) -> Fraction:
        return self.mv["e2"]

    @property
    def c(self) -> Fraction:
        return self.mv["e0"]

    def __repr__(self):
        return f"Line({self.a}x + {self.b}y + {self.c} = 0)"


@dataclass(frozen=True)
class Point:
    """Homogeneous point (x, y, z) stored as ``z E0 + x E1 + y E2``."""

    mv: Multivector

    def __post_init__(self):
        _require_grade(self.mv, 2, "Point")

    @property
    def weight(self) -> Fraction:
        return self.mv["E0"]

    @property
    def hx(self) -> Fraction:
        return self.mv["E1"]

    @property
    def hy(self) -> Fraction:
        return self.mv["E2"]

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        """Cartesian coordinates; raises for ideal points."""
        w = self.weight
        if w == 0:
            raise IdealPointError(f"{self!r} is an ideal point and has no Cartesian coordinates")
        return self.hx / w, self.hy / w

    def __repr__(self):
        return f"Point({self.hx}, {self.hy}, {self.weight})"


def point_from_xy(x, y) -> Point:
    return Point(kernel.E0 + as_rational(x) * kernel.E1 + as_rational(y) * kernel.E2)


def point_from_xyz(x, y, z) -> Point:
    return Point(Multivector([0, 0, 0, 0, z, x, y, 0]))


def line_from_abc(a, b, c) -> Line:
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if a == b == c == 0:
        raise ValueError("(0, 0, 0) does not define a line")
    return Line(Multivector([0, c, a, b]))


def normalize_point(p: Point) -> Point:
    """Divide through by the weight; rational, no square roots needed."""
    w = p.weight
    if w == 0:
        raise IdealPointError(f"cannot normalize ideal point {p!r} (zero weight)")
    return Point(kernel.scale(1 / w, p.mv))


def is_null_line(line: Line) -> bool:
    return line.a ** 2 + line.b ** 2 == 0


def is_ideal_point(p: Point) -> bool:
    return p.weight == 0


def incident(p: Point, line: Line) -> bool:
    return kernel.wedge(p.mv, line.mv).is_zero()
