from fractions import Fraction

import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from pgacalc import kernel, oracle
from pgacalc.constructions import (Triangle, altitude, centroid, cyclic, foot, join_points, median,
                                   meet_lines, midpoint, parallel_through, perpendicular_bisector,
                                   side, signed_area2)
from pgacalc.errors import DegenerateError, IdealPointError, NullLineError
from pgacalc.geometry import Line, Point, incident, line_from_abc, normalize_point, point_from_xy
from pgacalc.kernel import E0, E1, e0
from pgacalc.rtrig import is_perpendicular, quadrance, spread

from conftest import lines, points, rationals

P = point_from_xy


def same_line(line, a, b, c):
    return kernel.projectively_equal(line.mv, line_from_abc(a, b, c).mv)


def xy(p):
    return normalize_point(p).xy


def bisector_coords(p, q):
    """Coefficients of {X : |X-p|^2 = |X-q|^2}, expanded by hand."""
    (x1, y1), (x2, y2) = p, q
    return 2 * (x2 - x1), 2 * (y2 - y1), (x1 ** 2 + y1 ** 2) - (x2 ** 2 + y2 ** 2)


def test_join_examples():
    assert same_line(join_points(P(0, 0), P(1, 0)), 0, 1, 0)
    assert same_line(join_points(P(0, 0), P(1, 1)), 1, -1, 0)
    line = join_points(P(1, 2), P(3, 4))
    cl = oracle.CoordLine(line.a, line.b, line.c)
    assert oracle.on_line(oracle.CoordPoint(1, 2), cl) and oracle.on_line(oracle.CoordPoint(3, 4), cl)


def test_join_coincident_points_errors():
    with pytest.raises(DegenerateError):
        join_points(P(1, 2), Point(kernel.scale(3, P(1, 2).mv)))


def test_meet_examples():
    assert meet_lines(line_from_abc(1, 0, 0), line_from_abc(0, 1, 0)).mv == E0
    assert meet_lines(line_from_abc(1, 0, 0), line_from_abc(1, 0, -1)).weight == 0
    l, m = line_from_abc(1, 1, -1), line_from_abc(1, -1, 0)
    expected = oracle.solve_meet(oracle.CoordLine(1, 1, -1), oracle.CoordLine(1, -1, 0))
    assert xy(meet_lines(l, m)) == (expected.x, expected.y) == (Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(DegenerateError):
        meet_lines(l, Line(kernel.scale(2, l.mv)))


def test_altitude_examples():
    assert same_line(altitude(P(0, 0), line_from_abc(1, 1, -1)), 1, -1, 0)
    assert same_line(altitude(P(0, 0), line_from_abc(0, 1, 0)), 1, 0, 0)
    on = P(Fraction(1, 2), Fraction(1, 2))
    l = line_from_abc(1, 1, -1)
    alt = altitude(on, l)
    assert incident(on, alt) and is_perpendicular(alt, l)


def test_altitude_rejects_null_and_ideal():
    with pytest.raises(NullLineError):
        altitude(P(0, 0), Line(e0))
    with pytest.raises(IdealPointError):
        altitude(Point(E1), line_from_abc(1, 0, 0))


def test_parallel_through_examples():
    par = parallel_through(P(0, 1), line_from_abc(0, 1, 0))
    assert same_line(par, 0, 1, -1)
    l = line_from_abc(1, 1, -1)
    on = P(3, -2)
    assert kernel.projectively_equal(parallel_through(on, l).mv, l.mv)
    par = parallel_through(P(2, 3), l)
    assert incident(P(2, 3), par) and spread(par, l) == 0


def test_foot_examples():
    f = foot(P(1, 1), line_from_abc(0, 1, 0))
    ref = oracle.project_onto(oracle.CoordPoint(1, 1), oracle.CoordLine(0, 1, 0))
    assert xy(f) == (ref.x, ref.y) == (1, 0)
    on = P(4, 0)
    assert kernel.projectively_equal(foot(on, line_from_abc(0, 1, 0)).mv, on.mv)
    f = foot(P(0, 0), line_from_abc(1, 0, -3))
    ref = oracle.project_onto(oracle.CoordPoint(0, 0), oracle.CoordLine(1, 0, -3))
    assert xy(f) == (ref.x, ref.y) == (3, 0)


def test_midpoint_examples():
    assert xy(midpoint(P(0, 0), P(2, 0))) == (1, 0)
    assert xy(midpoint(P(1, 1), P(1, 1))) == (1, 1)
    assert xy(midpoint(P(0, 0), P(1, 1))) == (Fraction(1, 2), Fraction(1, 2))
    assert midpoint(P(0, 0), P(2, 0)).weight == 2
    with pytest.raises(IdealPointError):
        midpoint(Point(E1), P(0, 0))


@pytest.mark.parametrize("p, q", [((0, 0), (2, 0)), ((0, 0), (0, 2)), ((0, 0), (2, 2))])
def test_perpendicular_bisector_examples(p, q):
    assert same_line(perpendicular_bisector(P(*p), P(*q)), *bisector_coords(p, q))


def test_perpendicular_bisector_examples_values():
    assert same_line(perpendicular_bisector(P(0, 0), P(2, 0)), 1, 0, -1)
    assert same_line(perpendicular_bisector(P(0, 0), P(0, 2)), 0, 1, -1)
    assert same_line(perpendicular_bisector(P(0, 0), P(2, 2)), 1, 1, -2)
    with pytest.raises(DegenerateError):
        perpendicular_bisector(P(1, 1), P(1, 1))


def test_signed_area_examples():
    det = oracle.area2_det
    c = oracle.CoordPoint
    assert signed_area2(P(0, 0), P(1, 0), P(0, 1)) == det(c(0, 0), c(1, 0), c(0, 1)) == 1
    assert signed_area2(P(0, 0), P(0, 1), P(1, 0)) == det(c(0, 0), c(0, 1), c(1, 0)) == -1
    assert signed_area2(P(0, 0), P(1, 1), P(3, 3)) == 0
    # weights are normalized internally
    assert signed_area2(Point(kernel.scale(-2, E0)), P(1, 0), P(0, 1)) == 1


UNIT = Triangle(P(0, 0), P(1, 0), P(0, 1))


def test_sides_of_unit_triangle():
    assert same_line(side(UNIT, 3), 0, 1, 0)
    assert same_line(side(UNIT, 1), 1, 1, -1)
    assert same_line(side(UNIT, 2), 1, 0, 0)


def test_medians_of_unit_triangle():
    m1 = median(UNIT, 1)
    mid = P(Fraction(1, 2), Fraction(1, 2))
    assert same_line(m1, 1, -1, 0)
    assert incident(mid, m1)
    m2 = median(UNIT, 2)
    assert incident(P(1, 0), m2) and incident(P(0, Fraction(1, 2)), m2)
    for i in (1, 2, 3):
        assert incident(UNIT.vertex(i), median(UNIT, i))


@pytest.mark.parametrize("pts", [
    [(0, 0), (1, 0), (0, 1)],
    [(0, 0), (3, 0), (0, 3)],
    [(0, 0), (2, 0), (1, 1)],
])
def test_centroid_is_coordinate_mean(pts):
    mean = (sum(Fraction(p[0]) for p in pts) / 3, sum(Fraction(p[1]) for p in pts) / 3)
    assert centroid(Triangle(*(P(*p) for p in pts))).xy == mean


def test_centroid_examples():
    assert centroid(Triangle(P(0, 0), P(3, 0), P(0, 3))).xy == (1, 1)
    assert centroid(Triangle(P(0, 0), P(2, 0), P(1, 1))).xy == (1, Fraction(1, 3))


def test_triangle_normalizes_and_validates():
    t = Triangle(Point(kernel.scale(2, P(1, 1).mv)), P(0, 0), P(1, 0))
    assert t.A1.weight == 1
    with pytest.raises(DegenerateError):
        Triangle(P(0, 0), P(1, 1), P(2, 2))
    with pytest.raises(ValueError):
        cyclic(4)


def test_degenerate_triangle_keeps_area_sides_medians():
    t = Triangle(P(0, 0), P(1, 1), P(3, 3), degenerate=True)
    assert t.area2() == 0
    assert same_line(side(t, 1), 1, -1, 0)
    assert same_line(median(t, 1), 1, -1, 0)
    with pytest.raises(DegenerateError):
        centroid(t)


def test_eq6_on_unit_triangle():
    for i in (1, 2, 3):
        j, k = cyclic(i)
        assert side(UNIT, i).mv ^ side(UNIT, j).mv == UNIT.vertex(k).mv


@st.composite
def triangles(draw):
    a, b, c = draw(points()), draw(points()), draw(points())
    assume(signed_area2(a, b, c) != 0)
    return Triangle(a, b, c)


@given(triangles())
def test_triangle_identities(t):
    area2 = t.area2()
    for i in (1, 2, 3):
        j, k = cyclic(i)
        assert side(t, i).mv ^ side(t, j).mv == kernel.scale(area2, t.vertex(k).mv)
    assert side(t, 1).mv ^ side(t, 2).mv ^ side(t, 3).mv == kernel.scale(area2 ** 2, kernel.I)


@given(triangles())
def test_median_concurrency(t):
    target = kernel.scale(t.area2(), t.A1.mv + t.A2.mv + t.A3.mv)
    a = {i: side(t, i).mv for i in (1, 2, 3)}
    for i in (1, 2, 3):
        j, k = cyclic(i)
        mm = median(t, i).mv ^ median(t, j).mv
        assert mm == (a[k] ^ a[i]) + (a[i] ^ a[j]) + (a[j] ^ a[k]) == target
    assert kernel.projectively_equal(centroid(t).mv, target)


@given(triangles(), rationals.filter(lambda r: r not in (0, 1)))
def test_thales(t, lam):
    a1, a2, a3 = t.A1.mv, t.A2.mv, t.A3.mv
    b2 = kernel.scale(1 - lam, a1) + kernel.scale(lam, a2)
    b3 = kernel.scale(1 - lam, a1) + kernel.scale(lam, a3)
    meet = kernel.join(a2, a3) ^ kernel.join(b2, b3)
    assert meet["E0"] == 0
    assert meet == kernel.scale(lam * (1 - lam) * t.area2(), a2 - a3)


@given(points(scaled=True), lines(scaled=True))
def test_altitude_parallel_foot_predicates(p, l):
    alt, par, f = altitude(p, l), parallel_through(p, l), foot(p, l)
    assert incident(p, alt) and is_perpendicular(alt, l)
    assert incident(p, par) and spread(par, l) == 0
    assert incident(f, l) and incident(f, alt)
    if not incident(p, l):
        assert is_perpendicular(join_points(p, f), l)


@given(points(), points(), points())
def test_bisector_equidistance(p, q, r):
    assume(not kernel.projectively_equal(p.mv, q.mv))
    bis = perpendicular_bisector(p, q)
    x = foot(r, bis)
    assert quadrance(p, x) == quadrance(q, x)
    assert incident(midpoint(p, q), bis)
    assert is_perpendicular(bis, join_points(p, q))
    assert same_line(bis, *bisector_coords(p.xy, q.xy))
