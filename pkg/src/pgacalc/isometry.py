"""Reflections, rotations and translations as sandwich products.

Versors are never normalized (that would need sqrt(l^2 m^2)), so images come
out scaled by a nonzero rational, and a reflection flips the sign of 2-vectors.
Compare results with :func:`pgacalc.kernel.projectively_equal`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, TypeVar

from . import kernel
from .errors import NullLineError
from .geometry import Line, Point, is_null_line
from .kernel import Multivector

ODD = "odd"
EVEN = "even"


@dataclass(frozen=True)
class Versor:
    mv: Multivector
    parity: str
    generators: Optional[tuple[Line, ...]] = None

    def __post_init__(self):
        grades = self.mv.grades()
        if self.parity == ODD:
            ok = grades == {1} and self.mv["e1"] ** 2 + self.mv["e2"] ** 2 != 0
        elif self.parity == EVEN:
            ok = bool(grades) and grades <= {0, 2}
        else:
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")
        if not ok:
            raise ValueError(f"{self.mv!r} is not a valid {self.parity} versor")
        norm = kernel.geometric_product(self.mv, kernel.reverse(self.mv))
        if norm.grades() != {0}:
            raise ValueError(f"{self.mv!r} is not invertible as a versor (V ~V = {norm!r})")

    @classmethod
    def from_multivector(cls, mv: Multivector) -> "Versor":
        """Infer parity from the grades present."""
        parity = ODD if mv.grades() == {1} else EVEN
        return cls(mv, parity)

    @property
    def is_even(self) -> bool:
        return self.parity == EVEN


def _non_null(line: Line) -> None:
    if is_null_line(line):
        raise NullLineError(f"{line!r} is a null line; sandwiching by it is not an isometry")


def reflection(m: Line) -> Versor:
    _non_null(m)
    return Versor(m.mv, ODD, (m,))


def rotor(l: Line, m: Line) -> Versor:
    """The even versor ``m l``: reflect in ``l`` first, then in ``m``.

    A rotation about ``m ^ l``, or a translation when the lines are parallel.
    """
    _non_null(l)
    _non_null(m)
    return Versor(kernel.geometric_product(m.mv, l.mv), EVEN, (l, m))


T = TypeVar("T", Multivector, Point, Line)


def sandwich(v: Versor, x: Multivector) -> Multivector:
    if v.is_even:
        return kernel.geometric_product(kernel.geometric_product(v.mv, x), kernel.reverse(v.mv))
    return kernel.geometric_product(kernel.geometric_product(v.mv, x), v.mv)


def apply(v: Versor, x: T) -> T:
    """Sandwich ``x`` by ``v``; Point and Line inputs come back wrapped."""
    if isinstance(x, (Point, Line)):
        return type(x)(sandwich(v, x.mv))
    return sandwich(v, x)


def _require_even(v: Versor) -> None:
    if not v.is_even:
        raise ValueError("rotor parts are defined for even versors only")


def rotor_scalar_part(v: Versor) -> Fraction:
    _require_even(v)
    return v.mv.scalar_part()


def rotor_point_part(v: Versor) -> Multivector:
    _require_even(v)
    return v.mv.grade(2)
