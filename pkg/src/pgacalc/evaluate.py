"""Evaluation of parsed expressions and canonical printing of values.

Values are plain library objects: ``Fraction``, ``Point``, ``Line``,
``Multivector``, ``Versor`` or ``bool``; :func:`kind_of` gives the tag.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from . import constructions as cons
from . import kernel, rtrig
from .errors import GeometryError
from .geometry import (Line, Point, incident, is_ideal_point, is_null_line, line_from_abc,
                       normalize_point, point_from_xy)
from .isometry import Versor, apply, reflection, rotor, rotor_point_part, rotor_scalar_part
from .kernel import Multivector
from .scalar import format_rational
from .sexpr import (BoolLit, Expr, ExprError, IdealPointLit, LineLit, Literal, MvLit,
                    PointLit, VersorLit, parse, unparse)

RATIONAL, POINT, LINE, MV, VERSOR, BOOL = (
    "rational", "point", "line", "multivector", "versor", "boolean")
GEOMETRIC = frozenset({POINT, LINE, MV})


@dataclass(frozen=True)
class Operator:
    params: tuple[frozenset, ...]
    result: Callable[[list[str]], str]
    impl: Callable


def _fixed(kind: str):
    return lambda kinds: kind


def _same_as(i: int):
    return lambda kinds: kinds[i]


def _mv(x) -> Multivector:
    return x.mv if isinstance(x, (Point, Line, Versor)) else x


def _index(x: Fraction) -> int:
    if x.denominator != 1 or x not in (1, 2, 3):
        raise ValueError(f"median index must be 1, 2 or 3, got {format_rational(x)}")
    return int(x)


def _median(p, q, r, i):
    return cons.median(cons.Triangle(p, q, r), _index(i))


def _centroid(p, q, r):
    return cons.centroid(cons.Triangle(p, q, r, degenerate=True))


def _reflect(m: Line, x):
    return apply(reflection(m), x)


def _grade(k: Fraction, x):
    if k.denominator != 1:
        raise ValueError(f"grade must be an integer, got {format_rational(k)}")
    return kernel.grade_part(_mv(x), int(k))


def _op(params: Sequence, result, impl) -> Operator:
    return Operator(tuple(frozenset(p) if not isinstance(p, str) else frozenset({p}) for p in params),
                    result, impl)


P, L, R, V = POINT, LINE, RATIONAL, VERSOR
ANY = GEOMETRIC
ANY_OR_VERSOR = GEOMETRIC | {VERSOR}

OPERATORS: dict[str, Operator] = {
    # exact scalars
    "add": _op((R, R), _fixed(R), lambda a, b: a + b),
    "sub": _op((R, R), _fixed(R), lambda a, b: a - b),
    "mul": _op((R, R), _fixed(R), lambda a, b: a * b),
    "div": _op((R, R), _fixed(R), lambda a, b: a / b),
    # measurement
    "quadrance": _op((P, P), _fixed(R), rtrig.quadrance),
    "spread": _op((L, L), _fixed(R), rtrig.spread),
    "cross": _op((L, L), _fixed(R), rtrig.cross),
    "twist": _op((L, L), _fixed(R), rtrig.twist),
    "parallel?": _op((L, L), _fixed(BOOL), rtrig.is_parallel),
    "perpendicular?": _op((L, L), _fixed(BOOL), rtrig.is_perpendicular),
    "collinear?": _op((P, P, P), _fixed(BOOL), rtrig.collinear),
    "concurrent?": _op((L, L, L), _fixed(BOOL), rtrig.concurrent),
    "incident?": _op((P, L), _fixed(BOOL), incident),
    "null?": _op((L,), _fixed(BOOL), is_null_line),
    "ideal?": _op((P,), _fixed(BOOL), is_ideal_point),
    # constructions
    "normalize": _op((P,), _fixed(P), normalize_point),
    "join": _op((P, P), _fixed(L), cons.join_points),
    "meet": _op((L, L), _fixed(P), cons.meet_lines),
    "altitude": _op((P, L), _fixed(L), cons.altitude),
    "parallel-through": _op((P, L), _fixed(L), cons.parallel_through),
    "foot": _op((P, L), _fixed(P), cons.foot),
    "midpoint": _op((P, P), _fixed(P), cons.midpoint),
    "perp-bisector": _op((P, P), _fixed(L), cons.perpendicular_bisector),
    "area2": _op((P, P, P), _fixed(R), cons.signed_area2),
    "centroid": _op((P, P, P), _fixed(P), _centroid),
    "median": _op((P, P, P, R), _fixed(L), _median),
    # isometries
    "reflect": _op((L, ANY), _same_as(1), _reflect),
    "reflection": _op((L,), _fixed(V), reflection),
    "rotor": _op((L, L), _fixed(V), rotor),
    "apply": _op((V, ANY), _same_as(1), apply),
    "rotor-scalar": _op((V,), _fixed(R), rotor_scalar_part),
    "rotor-point": _op((V,), _fixed(MV), rotor_point_part),
    # raw algebra
    "as-mv": _op((ANY_OR_VERSOR,), _fixed(MV), _mv),
    "as-point": _op((ANY,), _fixed(P), lambda a: Point(_mv(a))),
    "as-line": _op((ANY,), _fixed(L), lambda a: Line(_mv(a))),
    "gp": _op((ANY, ANY), _fixed(MV), lambda a, b: kernel.geometric_product(_mv(a), _mv(b))),
    "wedge": _op((ANY, ANY), _fixed(MV), lambda a, b: kernel.wedge(_mv(a), _mv(b))),
    "vee": _op((ANY, ANY), _fixed(MV), lambda a, b: kernel.join(_mv(a), _mv(b))),
    "dot": _op((ANY, ANY), _fixed(MV), lambda a, b: kernel.lowest_grade_dot(_mv(a), _mv(b))),
    "mv-add": _op((ANY, ANY), _fixed(MV), lambda a, b: _mv(a) + _mv(b)),
    "scale": _op((R, ANY), _fixed(MV), lambda s, a: kernel.scale(s, _mv(a))),
    "reverse": _op((ANY,), _fixed(MV), lambda a: kernel.reverse(_mv(a))),
    "dual": _op((ANY,), _fixed(MV), lambda a: kernel.dual(_mv(a))),
    "square": _op((ANY,), _fixed(MV), lambda a: kernel.square(_mv(a))),
    "grade": _op((R, ANY), _fixed(MV), _grade),
    "projeq?": _op((ANY, ANY), _fixed(BOOL), lambda a, b: kernel.projectively_equal(_mv(a), _mv(b))),
}


def kind_of(value) -> str:
    if isinstance(value, bool):
        return BOOL
    if isinstance(value, Fraction):
        return RATIONAL
    if isinstance(value, Point):
        return POINT
    if isinstance(value, Line):
        return LINE
    if isinstance(value, Versor):
        return VERSOR
    if isinstance(value, Multivector):
        return MV
    raise TypeError(f"not a calculator value: {value!r}")


def evaluate(e: Expr):
    if isinstance(e, Literal):
        return e.value
    if isinstance(e, BoolLit):
        return e.value
    try:
        if isinstance(e, PointLit):
            return point_from_xy(e.x, e.y)
        if isinstance(e, IdealPointLit):
            return Point(Multivector([0, 0, 0, 0, 0, e.dx, e.dy]))
        if isinstance(e, LineLit):
            return line_from_abc(e.a, e.b, e.c)
        if isinstance(e, MvLit):
            return Multivector(e.coeffs)
        if isinstance(e, VersorLit):
            return Versor.from_multivector(Multivector(e.coeffs))
    except (ValueError, TypeError) as exc:
        raise ExprError(f"{exc} in {unparse(e)}") from None

    op = OPERATORS[e.op]
    args = [evaluate(a) for a in e.args]
    for i, (a, allowed) in enumerate(zip(args, op.params), start=1):
        if kind_of(a) not in allowed:
            raise ExprError(f"argument {i} of '{e.op}' must be {' or '.join(sorted(allowed))}, "
                            f"got {kind_of(a)} in {unparse(e)}", e.line, e.col)
    try:
        return op.impl(*args)
    except ZeroDivisionError as exc:
        raise ExprError(f"division by zero ({exc}) in {unparse(e)}", e.line, e.col) from None
    except (GeometryError, ValueError, TypeError) as exc:
        raise ExprError(f"{exc} in {unparse(e)}", e.line, e.col) from None


def evaluate_text(text: str):
    return evaluate(parse(text, OPERATORS))


# --- printing -------------------------------------------------------------


def integer_representative(values: Sequence[Fraction]) -> list[int]:
    """Scale a projective tuple to coprime integers whose first nonzero entry is positive."""
    den = lcm(*(v.denominator for v in values))
    ints = [int(v * den) for v in values]
    g = gcd(*ints)
    ints = [i // g for i in ints]
    lead = next(i for i in ints if i)
    return [-i for i in ints] if lead < 0 else ints


def _point_fields(p: Point):
    if p.weight == 0:
        dx, dy = integer_representative([p.hx, p.hy])
        return "ideal-point", [str(dx), str(dy)]
    x, y = p.xy
    return "point", [format_rational(x), format_rational(y)]


def format_text(value) -> str:
    kind = kind_of(value)
    if kind == BOOL:
        return "true" if value else "false"
    if kind == RATIONAL:
        return format_rational(value)
    if kind == POINT:
        head, fields = _point_fields(value)
        return f"({head} {' '.join(fields)})"
    if kind == LINE:
        a, b, c = integer_representative([value.a, value.b, value.c])
        return f"(line {a} {b} {c})"
    if kind == VERSOR:
        return "(versor " + " ".join(map(format_rational, value.mv.coeffs)) + ")"
    return "(mv " + " ".join(map(format_rational, value.coeffs)) + ")"


def structured_record(value) -> dict:
    kind = kind_of(value)
    if kind == BOOL:
        return {"kind": kind, "value": value}
    if kind == RATIONAL:
        return {"kind": kind, "value": format_rational(value)}
    if kind == POINT:
        head, fields = _point_fields(value)
        if head == "ideal-point":
            return {"kind": kind, "value": {"ideal": True, "dx": fields[0], "dy": fields[1]}}
        return {"kind": kind, "value": {"ideal": False, "x": fields[0], "y": fields[1]}}
    if kind == LINE:
        a, b, c = integer_representative([value.a, value.b, value.c])
        return {"kind": kind, "value": {"a": str(a), "b": str(b), "c": str(c)}}
    if kind == VERSOR:
        return {"kind": kind, "value": {"parity": value.parity,
                                        "coefficients": [format_rational(c) for c in value.mv.coeffs]}}
    return {"kind": kind, "value": [format_rational(c) for c in value.coeffs]}


def error_record(message: str) -> dict:
    return {"kind": "error", "value": None, "detail": message}


def format_value(value, mode: str = "text") -> str:
    if mode == "text":
        return format_text(value)
    if mode == "structured":
        return json.dumps(structured_record(value), sort_keys=True)
    raise ValueError(f"unknown output mode {mode!r}")


def same_value(a, b) -> bool:
    """Value equality as the printer sees it: projective for points and lines."""
    ka, kb = kind_of(a), kind_of(b)
    if ka != kb:
        return False
    if ka in (POINT, LINE):
        return kernel.projectively_equal(a.mv, b.mv)
    if ka == VERSOR:
        return a.parity == b.parity and a.mv == b.mv
    return a == b
