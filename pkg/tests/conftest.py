from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from pgacalc.geometry import Line, Point, line_from_abc, point_from_xy
from pgacalc.kernel import Multivector, scale

settings.register_profile("default", deadline=None, max_examples=80)
settings.load_profile("default")

# numerator / denominator with |value| <= 10 and denominator <= 10
rationals = st.integers(1, 10).flatmap(
    lambda d: st.integers(-10 * d, 10 * d).map(lambda n: Fraction(n, d)))
nonzero_rationals = rationals.filter(bool)


@st.composite
def multivectors(draw):
    return Multivector(draw(st.lists(rationals, min_size=8, max_size=8)))


@st.composite
def vectors(draw):
    """Arbitrary 1-vectors, null ones included."""
    return Multivector([0, draw(rationals), draw(rationals), draw(rationals)])


@st.composite
def points(draw, scaled=False):
    p = point_from_xy(draw(rationals), draw(rationals))
    if scaled:
        p = Point(scale(draw(nonzero_rationals), p.mv))
    return p


@st.composite
def lines(draw, scaled=False):
    a, b = draw(st.tuples(rationals, rationals).filter(lambda ab: ab != (0, 0)))
    line = line_from_abc(a, b, draw(rationals))
    if scaled:
        line = Line(scale(draw(nonzero_rationals), line.mv))
    return line


def F(s):
    return Fraction(s)
