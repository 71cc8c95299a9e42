"""The plane-based geometric algebra Cl(2,0,1).

Multivectors are dense tuples of 8 exact rationals over the basis

    1, e0, e1, e2, E0, E1, E2, I

with E0 = e1e2, E1 = e2e0, E2 = e0e1 and I = e0e1e2.  Lines are 1-vectors
(``c e0 + a e1 + b e2`` for ax + by + c = 0) and points are 2-vectors
(``z E0 + x E1 + y E2``).  The wedge product is the meet; the join is obtained
through the complement map ``dual`` (1<->I, ei<->Ei).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable

from .scalar import ZERO, as_rational, format_rational

BASIS = ("1", "e0", "e1", "e2", "E0", "E1", "E2", "I")
GRADES = (0, 1, 1, 1, 2, 2, 2, 3)
METRIC = (0, 1, 1)  # squares of e0, e1, e2

# Each named blade as (bitmask over e0,e1,e2, sign relative to the sorted blade).
# E1 = e2e0 = -e0e2 is the only one stored with a minus sign.
_BLADE_BITS = ((0b000, 1), (0b001, 1), (0b010, 1), (0b100, 1),
               (0b110, 1), (0b101, -1), (0b011, 1), (0b111, 1))
_BITS_TO_INDEX = {bits: (i, sign) for i, (bits, sign) in enumerate(_BLADE_BITS)}


def _reorder_sign(a: int, b: int) -> int:
    """Sign from moving the generators of sorted blade ``b`` past those of ``a``."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _bitmask_product(a: int, b: int) -> tuple[int, int]:
    sign = _reorder_sign(a, b)
    common = a & b
    for k in range(3):
        if common >> k & 1:
            sign *= METRIC[k]
    return a ^ b, sign


def _build_tables():
    gp, wedge = {}, {}
    for i, j in _cartesian(range(8), repeat=2):
        bi, si = _BLADE_BITS[i]
        bj, sj = _BLADE_BITS[j]
        bits, sign = _bitmask_product(bi, bj)
        k, sk = _BITS_TO_INDEX[bits]
        s = sign * si * sj * sk
        gp[i, j] = (k, s)
        wedge[i, j] = (k, s if bi & bj == 0 else 0)
    return gp, wedge


# (i, j) -> (k, sign): blade_i * blade_j = sign * blade_k, sign in {-1, 0, 1}
PRODUCT_TABLE, WEDGE_TABLE = _build_tables()


class Multivector:
    """Immutable element of Cl(2,0,1) with rational coefficients.

    Operators: ``*`` geometric product (or scaling by a rational), ``^`` wedge
    (meet), ``&`` join, ``|`` lowest-grade dot, ``~`` reversal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = tuple(as_rational(x) for x in coeffs)
        if len(c) > 8:
            raise ValueError(f"a multivector has 8 coefficients, got {len(c)}")
        object.__setattr__(self, "coeffs", c + (ZERO,) * (8 - len(c)))

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def blade(cls, name: str, coeff=1) -> "Multivector":
        c = [ZERO] * 8
        c[BASIS.index(name)] = as_rational(coeff)
        return cls(c)

    @classmethod
    def scalar(cls, value) -> "Multivector":
        return cls([value])

    def __getitem__(self, key):
        if isinstance(key, str):
            key = BASIS.index(key)
        return self.coeffs[key]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Multivector.scalar(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        terms = [f"{format_rational(c)}*{n}" for c, n in zip(self.coeffs, BASIS) if c]
        return f"Multivector({' + '.join(terms) or '0'})"

    def __str__(self):
        return " ".join(format_rational(c) for c in self.coeffs)

    # linear structure
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Multivector(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Multivector(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Multivector(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return scale(other, self)
        return NotImplemented

    def __xor__(self, other):
        return wedge(self, other) if isinstance(other, Multivector) else NotImplemented

    def __and__(self, other):
        return join(self, other) if isinstance(other, Multivector) else NotImplemented

    def __or__(self, other):
        return lowest_grade_dot(self, other) if isinstance(other, Multivector) else NotImplemented

    def __invert__(self):
        return reverse(self)

    def grade(self, k: int) -> "Multivector":
        return grade_part(self, k)

    def grades(self) -> set[int]:
        """Grades carrying a nonzero coefficient."""
        return {GRADES[i] for i, c in enumerate(self.coeffs) if c}

    def scalar_part(self) -> Fraction:
        return self.coeffs[0]


def _coerce(x):
    if isinstance(x, Multivector):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Multivector.scalar(x)
    return None


def _table_product(a: Multivector, b: Multivector, table) -> Multivector:
    out = [ZERO] * 8
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in enumerate(b.coeffs):
            if not y:
                continue
            k, s = table[i, j]
            if s:
                out[k] += s * x * y
    return Multivector(out)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return _table_product(a, b, PRODUCT_TABLE)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Outer product; on two lines this is their intersection point."""
    return _table_product(a, b, WEDGE_TABLE)


def dual(a: Multivector) -> Multivector:
    """Coefficient-preserving basis complement 1<->I, e_i<->E_i. An involution."""
    c = a.coeffs
    return Multivector((c[7], c[4], c[5], c[6], c[1], c[2], c[3], c[0]))


def join(a: Multivector, b: Multivector) -> Multivector:
    """Regressive product ``dual(dual(a) ^ dual(b))``; joins points into lines."""
    return dual(wedge(dual(a), dual(b)))


def grade_part(a: Multivector, k: int) -> Multivector:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade must be in 0..3, got {k}")
    return Multivector(c if g == k else ZERO for c, g in zip(a.coeffs, GRADES))


def lowest_grade_dot(a: Multivector, b: Multivector) -> Multivector:
    """Sum over homogeneous parts of ``<a_r b_s>_|r-s|``.

    For homogeneous inputs this is the lowest-grade part of the geometric
    product: the scalar l.m for two lines, the perpendicular line for a point
    and a line.  A vanishing result is returned as zero, not skipped over.
    """
    out = Multivector()
    parts_a = [(r, grade_part(a, r)) for r in sorted(a.grades())]
    parts_b = [(s, grade_part(b, s)) for s in sorted(b.grades())]
    for r, ar in parts_a:
        for s, bs in parts_b:
            out = out + grade_part(geometric_product(ar, bs), abs(r - s))
    return out


def reverse(a: Multivector) -> Multivector:
    return Multivector(-c if g >= 2 else c for c, g in zip(a.coeffs, GRADES))


def scale(s, a: Multivector) -> Multivector:
    s = as_rational(s)
    return Multivector(s * c for c in a.coeffs)


def square(a: Multivector) -> Multivector:
    return geometric_product(a, a)


def projectively_equal(a: Multivector, b: Multivector) -> bool:
    """True iff ``a = lam * b`` for some nonzero rational ``lam`` (or both are zero)."""
    za, zb = a.is_zero(), b.is_zero()
    if za or zb:
        return za and zb
    # a_i b_j == a_j b_i for all pairs <=> parallel coefficient vectors
    pivot = next(i for i, c in enumerate(b.coeffs) if c)
    lam = a.coeffs[pivot] / b.coeffs[pivot]
    return lam != 0 and all(x == lam * y for x, y in zip(a.coeffs, b.coeffs))


# Named basis blades for convenience.
ONE_MV = Multivector.blade("1")
e0 = Multivector.blade("e0")
e1 = Multivector.blade("e1")
e2 = Multivector.blade("e2")
E0 = Multivector.blade("E0")
E1 = Multivector.blade("E1")
E2 = Multivector.blade("E2")
I = Multivector.blade("I")  # noqa: E741
