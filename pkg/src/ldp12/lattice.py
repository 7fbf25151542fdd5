"""Exact two-dimensional integer and rational linear algebra.

Points are plain tuples ``(x, y)`` whose entries are ``int`` (lattice points)
or :class:`fractions.Fraction` (rational points).  Functionals on the plane
use the same representation; the pairing is the ordinary dot product.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple, Union

Number = Union[int, Fraction]
Point = Tuple[Number, Number]
Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

IDENTITY: Matrix = ((1, 0), (0, 1))


def det2(a: Point, b: Point) -> Number:
    """Return ``a.x*b.y - a.y*b.x``."""
    return a[0] * b[1] - a[1] * b[0]


def pair(m: Point, n: Point) -> Number:
    """Evaluate the functional ``m`` at ``n``."""
    return m[0] * n[0] + m[1] * n[1]


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def scale(t: Number, a: Point) -> Point:
    return (t * a[0], t * a[1])


def is_primitive(v: Point) -> bool:
    if v[0] == 0 and v[1] == 0:
        raise ValueError("zero vector has no primitivity")
    return gcd(v[0], v[1]) == 1


def primitive_of(v: Point) -> Point:
    """Shortest lattice vector pointing in the direction of ``v``."""
    if v[0] == 0 and v[1] == 0:
        raise ValueError("zero vector has no primitivity")
    g = gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


def matrix_det(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def apply_matrix(m: Matrix, p: Point) -> Point:
    return (m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1])


def apply_unimodular(m: Matrix, p: Point) -> Point:
    if abs(matrix_det(m)) != 1:
        raise ValueError(f"matrix {m} is not unimodular")
    return apply_matrix(m, p)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def unimodular_inverse(m: Matrix) -> Matrix:
    d = matrix_det(m)
    if abs(d) != 1:
        raise ValueError(f"matrix {m} is not unimodular")
    (a, b), (c, e) = m
    return ((d * e, -d * b), (-d * c, d * a))


def transpose(m: Matrix) -> Matrix:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def dual_action(m: Matrix) -> Matrix:
    """The map ``(M^T)^{-1}`` that carries functionals along with ``M``."""
    return transpose(unimodular_inverse(m))


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def complete_basis(u: Point) -> Point:
    """Return ``e`` with ``det2(u, e) == 1`` for a primitive ``u``."""
    g, s, t = extended_gcd(u[0], u[1])
    if g != 1:
        raise ValueError(f"{u} is not primitive")
    # s*x + t*y = 1  =>  det2((x, y), (-t, s)) = 1
    return (-t, s)


def edge_functional(u: Point, v: Point) -> Point:
    """The unique ``m`` with ``<m, u> = <m, v> = -1``.

    ``u`` and ``v`` must be linearly independent.
    """
    d = det2(u, v)
    if d == 0:
        raise ValueError(f"{u} and {v} are linearly dependent")
    return (Fraction(u[1] - v[1], d), Fraction(v[0] - u[0], d))


def as_lattice(p: Point) -> Tuple[int, int]:
    """Convert a rational point with integral entries to an integer tuple."""
    out = []
    for c in p:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"{p} is not a lattice point")
        out.append(c.numerator)
    return (out[0], out[1])


def format_rational(q: Number) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when integral."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: Union[str, int]) -> Fraction:
    return Fraction(s)


def format_point(p: Point) -> list:
    """Points serialize as two-element arrays; ``Fraction`` entries as strings."""
    if all(isinstance(c, int) for c in p):
        return [c for c in p]
    return [format_rational(c) for c in p]


def format_points(ps: Sequence[Point]) -> list:
    return [format_point(p) for p in ps]
