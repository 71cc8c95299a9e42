"""Coordinate reference formulas used for differential testing.

Nothing in here touches multivectors or the kernel: points are (x, y) pairs,
lines are (a, b, c) triples for ax + by + c = 0.  The blade-word reducer at the
bottom rebuilds the basis product table by rewriting generator strings, a
different route from the kernel's bitmask arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CoordPoint:
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class CoordLine:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if self.a == self.b == self.c == 0:
            raise ValueError("(0, 0, 0) is not a line")


def quadrance_coords(p: CoordPoint, q: CoordPoint) -> Fraction:
    return (p.x - q.x) ** 2 + (p.y - q.y) ** 2


def spread_coords(l: CoordLine, m: CoordLine) -> Fraction:
    n1 = l.a ** 2 + l.b ** 2
    n2 = m.a ** 2 + m.b ** 2
    if n1 == 0 or n2 == 0:
        raise ValueError("spread of a null line")
    return Fraction((l.a * m.b - m.a * l.b) ** 2) / (n1 * n2)


def cross_coords(l: CoordLine, m: CoordLine) -> Fraction:
    n1 = l.a ** 2 + l.b ** 2
    n2 = m.a ** 2 + m.b ** 2
    if n1 == 0 or n2 == 0:
        raise ValueError("cross of a null line")
    return Fraction((l.a * m.a + l.b * m.b) ** 2) / (n1 * n2)


def area2_det(p: CoordPoint, q: CoordPoint, r: CoordPoint) -> Fraction:
    """det [[1, px, py], [1, qx, qy], [1, rx, ry]], expanded along the first column."""
    return (q.x * r.y - r.x * q.y) - (p.x * r.y - r.x * p.y) + (p.x * q.y - q.x * p.y)


def on_line(p: CoordPoint, l: CoordLine) -> bool:
    return l.a * p.x + l.b * p.y + l.c == 0


def reflect_coords(m: CoordLine, p: CoordPoint) -> CoordPoint:
    n = m.a ** 2 + m.b ** 2
    if n == 0:
        raise ValueError("reflection in a null line")
    k = 2 * (m.a * p.x + m.b * p.y + m.c) / Fraction(n)
    return CoordPoint(p.x - k * m.a, p.y - k * m.b)


def solve_meet(l: CoordLine, m: CoordLine) -> CoordPoint | None:
    """Cramer's rule; None for parallel lines."""
    det = l.a * m.b - m.a * l.b
    if det == 0:
        return None
    return CoordPoint(Fraction(l.b * m.c - m.b * l.c) / det, Fraction(m.a * l.c - l.a * m.c) / det)


def project_onto(p: CoordPoint, l: CoordLine) -> CoordPoint:
    """Orthogonal projection of p onto l."""
    n = l.a ** 2 + l.b ** 2
    k = (l.a * p.x + l.b * p.y + l.c) / Fraction(n)
    return CoordPoint(p.x - k * l.a, p.y - k * l.b)


# --- blade products by word rewriting -------------------------------------

SQUARES = {0: 0, 1: 1, 2: 1}

BLADE_WORDS = {
    "1": (),
    "e0": (0,),
    "e1": (1,),
    "e2": (2,),
    "E0": (1, 2),
    "E1": (2, 0),
    "E2": (0, 1),
    "I": (0, 1, 2),
}


def reduce_word(word) -> tuple[int, tuple[int, ...]]:
    """Bubble-sort a generator word, flipping sign per swap and contracting
    equal neighbours with their square. Returns (sign, sorted word)."""
    w = list(word)
    sign = 1
    changed = True
    while changed and sign:
        changed = False
        i = 0
        while i < len(w) - 1:
            if w[i] == w[i + 1]:
                sign *= SQUARES[w[i]]
                del w[i:i + 2]
                changed = True
            elif w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                sign = -sign
                changed = True
                i += 1
            else:
                i += 1
    return sign, tuple(w)


def blade_product(x: str, y: str) -> tuple[int, str]:
    """(sign, blade name) with ``x * y == sign * blade``; sign 0 when it vanishes."""
    sign, word = reduce_word(BLADE_WORDS[x] + BLADE_WORDS[y])
    if sign == 0:
        return 0, "1"
    for name, w in BLADE_WORDS.items():
        s, canon = reduce_word(w)
        if canon == word:
            return sign * s, name
    raise AssertionError(f"no basis blade for word {word}")
