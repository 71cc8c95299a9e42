"""Randomized exact-identity suites.

Each suite draws random rational inputs from a seeded ``random.Random`` and
compares the algebraic route against a coordinate oracle or a closed-form
identity, with exact equality.  ``pgacalc selftest`` runs all of them; the
acceptance tests run the numbered criteria individually.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import constructions as cons
from . import kernel, oracle, rtrig
from .geometry import Line, Point, incident, line_from_abc, normalize_point, point_from_xy
from .isometry import Versor, apply, reflection, rotor
from .kernel import BASIS, PRODUCT_TABLE, Multivector


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 20240601
    bound: int = 10  # coefficients drawn from [-bound, bound]
    max_den: int = 10
    algebra_cases: int = 500
    quadrance_cases: int = 1000
    spread_cases: int = 1000
    triangle_cases: int = 500
    thales_cases: int = 100
    isometry_cases: int = 200
    rotor_cases: int = 200
    misc_cases: int = 200


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.cases - len(self.failures)}/{self.cases} cases"
        if self.failures:
            line += f"; first failure: {self.failures[0]}"
        return line


# --- random inputs --------------------------------------------------------


class Sampler:
    def __init__(self, cfg: SuiteConfig, rng: random.Random):
        self.cfg = cfg
        self.rng = rng

    def rational(self, bound: int | None = None) -> Fraction:
        bound = self.cfg.bound if bound is None else bound
        den = self.rng.randint(1, self.cfg.max_den)
        return Fraction(self.rng.randint(-bound * den, bound * den), den)

    def nonzero(self) -> Fraction:
        while True:
            r = self.rational()
            if r:
                return r

    def lam(self) -> Fraction:
        while True:
            r = self.rational(3)
            if r not in (0, 1):
                return r

    def multivector(self) -> Multivector:
        return Multivector(self.rational() for _ in range(8))

    def xy(self) -> tuple[Fraction, Fraction]:
        return self.rational(), self.rational()

    def point(self, scaled: bool = False) -> Point:
        p = point_from_xy(*self.xy())
        return Point(kernel.scale(self.nonzero(), p.mv)) if scaled else p

    def line(self, scaled: bool = False) -> Line:
        while True:
            a, b, c = self.rational(), self.rational(), self.rational()
            if a or b:
                break
        line = line_from_abc(a, b, c)
        return Line(kernel.scale(self.nonzero(), line.mv)) if scaled else line

    def triangle(self) -> cons.Triangle:
        while True:
            pts = [self.point() for _ in range(3)]
            if cons.signed_area2(*pts) != 0:
                return cons.Triangle(*pts)

    def versor(self) -> Versor:
        kind = self.rng.choice(("reflection", "rotation", "translation"))
        l = self.line()
        if kind == "reflection":
            return reflection(l)
        if kind == "translation":
            return rotor(l, Line(l.mv + self.nonzero() * kernel.e0))
        return rotor(l, self.line())


def _coords(p: Point) -> oracle.CoordPoint:
    return oracle.CoordPoint(*p.xy)


def _coord_line(l: Line) -> oracle.CoordLine:
    return oracle.CoordLine(l.a, l.b, l.c)


Case = Iterator[tuple[bool, str]]


# --- acceptance criteria ---------------------------------------------------


def blade_table(s: Sampler) -> Case:
    for i, x in enumerate(BASIS):
        for j, y in enumerate(BASIS):
            k, sign = PRODUCT_TABLE[i, j]
            osign, oname = oracle.blade_product(x, y)
            ok = sign == osign and (sign == 0 or BASIS[k] == oname)
            yield ok, f"{x}*{y}: kernel {sign}*{BASIS[k]}, oracle {osign}*{oname}"
    expected = {"1": 1, "e0": 0, "e1": 1, "e2": 1, "E0": -1, "E1": 0, "E2": 0, "I": 0}
    for name, sq in expected.items():
        b = Multivector.blade(name)
        yield kernel.square(b) == Multivector.scalar(sq), f"{name}^2 != {sq}"


def associativity_and_split(s: Sampler) -> Case:
    for _ in range(s.cfg.algebra_cases):
        x, y, z = s.multivector(), s.multivector(), s.multivector()
        yield (x * y) * z == x * (y * z), f"(XY)Z != X(YZ) for {x!r}, {y!r}, {z!r}"
        l = Multivector([0, *s.xy(), s.rational()])
        m = Multivector([0, *s.xy(), s.rational()])
        yield l * m == (l | m) + (l ^ m), f"lm != l.m + l^m for {l!r}, {m!r}"


def quadrance_oracle(s: Sampler) -> Case:
    for _ in range(s.cfg.quadrance_cases):
        p, q = s.point(), s.point()
        ref = oracle.quadrance_coords(_coords(p), _coords(q))
        unit = kernel.square(kernel.join(p.mv, q.mv)).scalar_part()
        yield unit == ref, f"(A v B)^2 = {unit} != {ref} for {p!r}, {q!r}"
        yield rtrig.quadrance(p, q) == ref, f"quotient form on weight-1 {p!r}, {q!r}"
        ps = Point(kernel.scale(s.nonzero(), p.mv))
        qs = Point(kernel.scale(s.nonzero(), q.mv))
        got = rtrig.quadrance(ps, qs)
        yield got == ref, f"quotient form {got} != {ref} for scaled {ps!r}, {qs!r}"


def spread_oracle(s: Sampler) -> Case:
    for n in range(s.cfg.spread_cases):
        l, m = s.line(scaled=n % 2 == 1), s.line(scaled=n % 3 == 1)
        ref = oracle.spread_coords(_coord_line(l), _coord_line(m))
        got = rtrig.spread(l, m)
        yield got == ref, f"spread {got} != {ref} for {l!r}, {m!r}"


def spread_cross_twist(s: Sampler) -> Case:
    for n in range(s.cfg.spread_cases):
        l, m = s.line(scaled=n % 2 == 0), s.line()
        # keep exact perpendicular and parallel pairs in the mix
        if n % 20 == 10:
            m = cons.altitude(s.point(), l)
        elif n % 20 == 0:
            m = Line(l.mv + s.nonzero() * kernel.e0)
        sp, cr = rtrig.spread(l, m), rtrig.cross(l, m)
        yield sp + cr == 1, f"spread + cross = {sp + cr} for {l!r}, {m!r}"
        yield cr == oracle.cross_coords(_coord_line(l), _coord_line(m)), f"cross oracle for {l!r}, {m!r}"
        if cr:
            tw = rtrig.twist(l, m)
            yield tw == sp / cr, f"twist {tw} != spread/cross for {l!r}, {m!r}"


def triangle_identities(s: Sampler) -> Case:
    for _ in range(s.cfg.triangle_cases):
        t = s.triangle()
        area2 = kernel.join(kernel.join(t.A1.mv, t.A2.mv), t.A3.mv).scalar_part()
        det = oracle.area2_det(*(_coords(v) for v in (t.A1, t.A2, t.A3)))
        yield area2 == det, f"triple join {area2} != det {det} for {t!r}"
        yield t.area2() == det, f"signed_area2 != det for {t!r}"
        for i in (1, 2, 3):
            j, k = cons.cyclic(i)
            lhs = cons.side(t, i).mv ^ cons.side(t, j).mv
            yield lhs == kernel.scale(area2, t.vertex(k).mv), f"a{i}^a{j} != 2A*A{k} for {t!r}"
            sq = kernel.square(cons.side(t, i).mv).scalar_part()
            ref = oracle.quadrance_coords(_coords(t.vertex(j)), _coords(t.vertex(k)))
            yield sq == ref, f"a{i}^2 = {sq} != Q(A{j},A{k}) = {ref}"
        triple = cons.side(t, 1).mv ^ cons.side(t, 2).mv ^ cons.side(t, 3).mv
        yield triple == kernel.scale(area2 ** 2, kernel.I), f"a1^a2^a3 != 4A^2 I for {t!r}"


def median_concurrency(s: Sampler) -> Case:
    for _ in range(s.cfg.triangle_cases):
        t = s.triangle()
        area2 = t.area2()
        total = t.A1.mv + t.A2.mv + t.A3.mv
        target = kernel.scale(area2, total)
        sides = {i: cons.side(t, i).mv for i in (1, 2, 3)}
        for i in (1, 2, 3):
            j, k = cons.cyclic(i)
            mm = cons.median(t, i).mv ^ cons.median(t, j).mv
            unsimplified = (sides[k] ^ sides[i]) + (sides[i] ^ sides[j]) + (sides[j] ^ sides[k])
            yield mm == target, f"m{i}^m{j} != 2A(A1+A2+A3) for {t!r}"
            yield mm == unsimplified, f"m{i}^m{j} != a{k}^a{i} + a{i}^a{j} + a{j}^a{k}"
            yield (cons.median(t, j).mv ^ cons.median(t, i).mv) == -target, f"m{j}^m{i} sign"
        cx = sum((_coords(v).x for v in (t.A1, t.A2, t.A3)), Fraction(0)) / 3
        cy = sum((_coords(v).y for v in (t.A1, t.A2, t.A3)), Fraction(0)) / 3
        yield cons.centroid(t).xy == (cx, cy), f"centroid != coordinate mean for {t!r}"


def thales(s: Sampler) -> Case:
    for _ in range(s.cfg.thales_cases):
        t = s.triangle()
        lam = s.lam()
        a1, a2, a3 = t.A1.mv, t.A2.mv, t.A3.mv
        b2 = kernel.scale(1 - lam, a1) + kernel.scale(lam, a2)
        b3 = kernel.scale(1 - lam, a1) + kernel.scale(lam, a3)
        meet = kernel.join(a2, a3) ^ kernel.join(b2, b3)
        expected = kernel.scale(lam * (1 - lam) * t.area2(), a2 - a3)
        yield meet["E0"] == 0 and not meet.is_zero(), f"meet {meet!r} is not ideal (lam={lam})"
        yield meet == expected, f"meet {meet!r} != lam(1-lam)2A(A2-A3) for lam={lam}, {t!r}"


def isometry_invariance(s: Sampler) -> Case:
    for _ in range(s.cfg.isometry_cases):
        v = s.versor()
        a, b, c = s.point(scaled=True), s.point(), s.point()
        l, m = s.line(scaled=True), s.line()
        va, vb, vc = (apply(v, p) for p in (a, b, c))
        yield rtrig.quadrance(va, vb) == rtrig.quadrance(a, b), f"quadrance not preserved by {v!r}"
        yield rtrig.spread(apply(v, l), apply(v, m)) == rtrig.spread(l, m), f"spread not preserved by {v!r}"
        on_l = cons.foot(a, l)
        for p in (on_l, b):
            yield incident(p, l) == incident(apply(v, p), apply(v, l)), f"incidence changed by {v!r}"
        before = cons.signed_area2(a, b, c)
        after = cons.signed_area2(*(normalize_point(p) for p in (va, vb, vc)))
        sign = 1 if v.is_even else -1
        yield after == sign * before, f"area2 {before} -> {after} under {v.parity} versor"


def rotor_surrogates(s: Sampler) -> Case:
    for n in range(s.cfg.rotor_cases):
        l, m = s.line(scaled=n % 2 == 0), s.line()
        r = rotor(l, m)
        norms = kernel.square(l.mv).scalar_part() * kernel.square(m.mv).scalar_part()
        scalar = r.mv.scalar_part()
        point_sq = kernel.square(r.mv.grade(2)).scalar_part()
        yield rtrig.cross(l, m) * norms == scalar ** 2, f"cross*l^2m^2 != <ml>_0^2 for {l!r}, {m!r}"
        yield rtrig.spread(l, m) * norms == -point_sq, f"spread*l^2m^2 != -<ml>_2^2 for {l!r}, {m!r}"
        image = Line(kernel.geometric_product(kernel.geometric_product(m.mv, l.mv), m.mv))
        lhs = rtrig.spread(l, image)
        rhs = 4 * rtrig.spread(l, m) * rtrig.cross(l, m)
        yield lhs == rhs, f"double angle: {lhs} != {rhs} for {l!r}, {m!r}"


# --- further invariants ---------------------------------------------------


def scalar_field_axioms(s: Sampler) -> Case:
    from .scalar import format_rational, parse_rational
    for _ in range(s.cfg.misc_cases):
        a, b, c = s.rational(), s.rational(), s.rational()
        yield (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c), "associativity"
        yield a * (b + c) == a * b + a * c, "distributivity"
        if a:
            yield a * (1 / a) == 1, f"inverse of {a}"
        yield parse_rational(format_rational(a)) == a, f"format/parse round trip of {a}"


def kernel_involutions(s: Sampler) -> Case:
    for _ in range(s.cfg.misc_cases):
        x, y = s.multivector(), s.multivector()
        yield kernel.dual(kernel.dual(x)) == x, "dual is an involution"
        yield kernel.reverse(x * y) == kernel.reverse(y) * kernel.reverse(x), "reversal anti-automorphism"
        yield sum((x.grade(k) for k in range(4)), Multivector()) == x, "grade parts sum to X"
        l, m = Multivector([0, *s.xy(), s.rational()]), Multivector([0, *s.xy(), s.rational()])
        yield (l ^ m) == -(m ^ l), "wedge antisymmetry"
        yield kernel.dual(l ^ m) == kernel.join(kernel.dual(l), kernel.dual(m)), "de Morgan"
        p, line = s.point(scaled=True), s.line()
        yield (p.mv ^ line.mv).is_zero() == kernel.join(p.mv, line.mv).is_zero(), "P^m=0 iff Pvm=0"


def construction_predicates(s: Sampler) -> Case:
    for _ in range(s.cfg.misc_cases):
        p, l = s.point(scaled=True), s.line(scaled=True)
        alt = cons.altitude(p, l)
        par = cons.parallel_through(p, l)
        ft = cons.foot(p, l)
        yield incident(p, alt) and rtrig.is_perpendicular(alt, l), "altitude"
        yield incident(p, par) and rtrig.spread(par, l) == 0, "parallel through"
        yield incident(ft, l) and incident(ft, alt), "foot on both lines"
        ref = oracle.project_onto(_coords(p), _coord_line(l))
        yield _coords(normalize_point(ft)) == ref, "foot equals orthogonal projection"
        q = s.point()
        if kernel.projectively_equal(p.mv, q.mv):
            continue
        bis = cons.perpendicular_bisector(p, q)
        x = cons.foot(s.point(), bis)
        yield rtrig.quadrance(p, x) == rtrig.quadrance(q, x), "bisector equidistance"
        yield rtrig.is_perpendicular(bis, cons.join_points(p, q)), "bisector perpendicular"
        yield incident(cons.midpoint(p, q), bis), "bisector through midpoint"


def reflection_oracle(s: Sampler) -> Case:
    for _ in range(s.cfg.misc_cases):
        m, p = s.line(scaled=True), s.point(scaled=True)
        image = apply(reflection(m), p)
        ref = oracle.reflect_coords(_coord_line(m), _coords(p))
        yield _coords(normalize_point(image)) == ref, f"reflection of {p!r} in {m!r}"
        l = s.line()
        r = rotor(l, m)
        two_step = apply(reflection(m), apply(reflection(l), p))
        yield kernel.projectively_equal(apply(r, p).mv, two_step.mv), "thick sandwich = two reflections"
        fixed = l.mv ^ m.mv
        if not fixed.is_zero():
            yield kernel.projectively_equal(apply(r, fixed), m.mv ^ l.mv), "rotor fixes m^l"


def translation_characterization(s: Sampler) -> Case:
    for _ in range(s.cfg.misc_cases):
        l = s.line()
        shift = s.nonzero()
        t = rotor(l, Line(l.mv + shift * kernel.e0))
        dx, dy = s.xy()
        if dx == dy == 0:
            continue
        ideal = Point(Multivector([0, 0, 0, 0, 0, dx, dy]))
        yield kernel.projectively_equal(apply(t, ideal).mv, ideal.mv), "translation fixes ideal points"
        p = s.point()
        yield not kernel.projectively_equal(apply(t, p).mv, p.mv), "translation fixes a proper point"
        # displacement: reflecting in two parallels at quadrance d moves by quadrance 4d
        sep = shift ** 2 / kernel.square(l.mv).scalar_part()
        yield rtrig.quadrance(p, apply(t, p)) == 4 * sep, "translation displacement is 4x separation"


ACCEPTANCE: dict[int, tuple[str, Callable[[Sampler], Case]]] = {
    1: ("blade product table", blade_table),
    2: ("associativity and lm = l.m + l^m", associativity_and_split),
    3: ("quadrance vs coordinate oracle", quadrance_oracle),
    4: ("spread vs coordinate oracle", spread_oracle),
    5: ("spread + cross = 1, twist = spread/cross", spread_cross_twist),
    6: ("triangle area, side-wedge and triple-wedge identities", triangle_identities),
    7: ("median concurrency and centroid", median_concurrency),
    8: ("Thales parallel construction", thales),
    9: ("isometry invariance and orientation", isometry_invariance),
    10: ("rotor parts and double-angle spread", rotor_surrogates),
}

EXTRA: dict[str, Callable[[Sampler], Case]] = {
    "rational field axioms and text round trip": scalar_field_axioms,
    "dual, reversal, grade split, de Morgan, incidence": kernel_involutions,
    "altitude, parallel, foot and bisector predicates": construction_predicates,
    "reflection oracle and sandwich composition": reflection_oracle,
    "translation characterization": translation_characterization,
}


def run_check(name: str, fn: Callable[[Sampler], Case], cfg: SuiteConfig | None = None,
              seed_offset: int = 0) -> CheckResult:
    cfg = cfg or SuiteConfig()
    sampler = Sampler(cfg, random.Random(cfg.seed + seed_offset))
    result = CheckResult(name)
    for ok, detail in fn(sampler):
        result.cases += 1
        if not ok:
            result.failures.append(detail)
    return result


def run_criterion(n: int, cfg: SuiteConfig | None = None) -> CheckResult:
    name, fn = ACCEPTANCE[n]
    return run_check(f"criterion {n}: {name}", fn, cfg, seed_offset=n)


def run_all(cfg: SuiteConfig | None = None) -> list[CheckResult]:
    results = [run_criterion(n, cfg) for n in ACCEPTANCE]
    for offset, (name, fn) in enumerate(EXTRA.items(), start=100):
        results.append(run_check(name, fn, cfg, seed_offset=offset))
    return results
