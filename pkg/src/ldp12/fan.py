"""Cones of the spanning fan, their sails, and the refined unimodular fan.

Conventions.  A cone is given by primitive generators ``(u1, u2)`` with
``det2(u1, u2) = V > 0``.  Its residue ``a`` in ``[0, V)`` is the unique one
making ``w = (a*u1 + u2) / V`` a lattice point; unimodular cones use
``a = 0`` and ``w = u2``.  Sail chains run from ``u2`` to ``u1`` (clockwise),
so consecutive chain points satisfy ``det2(b[i], b[i-1]) == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from .lattice import (
    Point,
    add,
    complete_basis,
    det2,
    edge_functional,
    format_point,
    format_points,
    format_rational,
    is_primitive,
    scale,
    sub,
)
from .polygon import Polygon, convex_hull, require_ldp


@dataclass(frozen=True)
class Cone:
    u1: Point
    u2: Point
    V: int
    a: int
    w: Point

    def __post_init__(self):
        if det2(self.u1, self.u2) != self.V or self.V <= 0:
            raise ValueError("cone invariant det2(u1, u2) == V > 0 violated")
        if self.V == 1:
            if self.a != 0 or self.w != self.u2:
                raise ValueError("unimodular cones carry a = 0, w = u2")
        else:
            if not 0 <= self.a < self.V or gcd(self.a, self.V) != 1:
                raise ValueError("cone residue a must be a unit modulo V")
            if add(scale(self.a, self.u1), self.u2) != scale(self.V, self.w):
                raise ValueError("cone invariant V*w == a*u1 + u2 violated")

    @property
    def is_unimodular(self) -> bool:
        return self.V == 1

    @property
    def m_sigma(self) -> Point:
        """Functional equal to -1 on both generators."""
        return edge_functional(self.u1, self.u2)

    def to_json(self) -> dict:
        return {
            "u1": format_point(self.u1),
            "u2": format_point(self.u2),
            "V": self.V,
            "a": self.a,
            "w": format_point(self.w),
        }


def cone_params(u1: Point, u2: Point) -> Cone:
    """Build the :class:`Cone` over primitive generators ``u1``, ``u2``."""
    V = det2(u1, u2)
    if V <= 0:
        raise ValueError(f"det2({list(u1)}, {list(u2)}) = {V} is not positive")
    if not (is_primitive(u1) and is_primitive(u2)):
        raise ValueError("cone generators must be primitive")
    if V == 1:
        return Cone(u1, u2, 1, 0, u2)
    # u2 = alpha*u1 + V*e in the basis (u1, e), so a*u1 + u2 is divisible by V
    # exactly when a = -alpha (mod V).
    e = complete_basis(u1)
    alpha = det2(u2, e)
    a = (-alpha) % V
    w = ((a * u1[0] + u2[0]) // V, (a * u1[1] + u2[1]) // V)
    return Cone(u1, u2, V, a, w)


def normal_form_cone(V: int, a: int) -> Cone:
    """The cone ``((1, 0), (c, V))`` with ``c = -a mod V``; it has invariants (V, a)."""
    if V == 1:
        return cone_params((1, 0), (0, 1))
    return cone_params((1, 0), ((-a) % V, V))


def spanning_fan(p: Polygon) -> List[Cone]:
    """One cone per edge ``(v_i, v_{i+1})`` of the LDP polygon ``p``.

    With CCW vertices, ``u1 = v_i`` and ``u2 = v_{i+1}`` give a positive
    determinant.
    """
    require_ldp(p)
    return [cone_params(a, b) for a, b in p.edges()]


def parallelogram_points(c: Cone) -> List[Point]:
    """Lattice points of the half-open parallelogram on ``u1``, ``u2``.

    The i-th point is ``((i*a mod V)*u1 + i*u2) / V``.
    """
    V, a = c.V, c.a
    out = []
    for i in range(V):
        r = (i * a) % V
        x = r * c.u1[0] + i * c.u2[0]
        y = r * c.u1[1] + i * c.u2[1]
        out.append((x // V, y // V))
    return out


@dataclass(frozen=True)
class Sail:
    """Boundary chain ``u2 = b_0, ..., b_k = u1`` with its edge functionals."""

    boundary: Tuple[Point, ...]
    m_sigma: Point
    functionals: Tuple[Point, ...] = field(default=())

    @property
    def k(self) -> int:
        return len(self.boundary) - 1

    def to_json(self) -> dict:
        return {
            "boundary": format_points(self.boundary),
            "m_sigma": format_point(self.m_sigma),
            "functionals": format_points(self.functionals),
            "k": self.k,
        }


def sail_chain(u1: Point, u2: Point) -> List[Point]:
    """Hirzebruch-Jung chain from ``u2`` to ``u1``.

    The neighbour of ``u2`` is ``(u1 + b*u2) / V`` with ``b`` the inverse of
    ``a`` modulo ``V``; the rest of the chain is the chain of the smaller cone
    on ``(u1, neighbour)``.
    """
    chain = [u2]
    cur = u2
    while True:
        c = cone_params(u1, cur)
        if c.V == 1:
            break
        b = pow(c.a, -1, c.V)
        cur = ((u1[0] + b * cur[0]) // c.V, (u1[1] + b * cur[1]) // c.V)
        chain.append(cur)
    chain.append(u1)
    return chain


def sail_chain_bruteforce(u1: Point, u2: Point) -> List[Point]:
    """The same chain straight from its definition.

    Takes the convex hull of the nonzero lattice points of the triangle
    ``conv(0, u1, u2)``, walks its boundary from ``u2`` to ``u1`` on the side
    facing the origin, and inserts lattice points lying inside hull edges.
    """
    V = det2(u1, u2)
    xs = [0, u1[0], u2[0]]
    ys = [0, u1[1], u2[1]]
    pts = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            n = (x, y)
            s, t = det2(n, u2), det2(u1, n)
            if n != (0, 0) and s >= 0 and t >= 0 and s + t <= V:
                pts.append(n)
    hull = convex_hull(pts)  # CCW
    near = []
    if len(hull) < 3:
        # all nonzero points lie on the segment u1 u2
        near = [u2, u1]
    else:
        # the CCW hull goes u1 -> u2 along the far edge; the near side is
        # the remaining arc u2 -> ... -> u1
        i = hull.index(u2)
        while True:
            near.append(hull[i])
            if hull[i] == u1:
                break
            i = (i + 1) % len(hull)
    chain = [near[0]]
    for p, q in zip(near, near[1:]):
        d = sub(q, p)
        g = gcd(d[0], d[1])
        for j in range(1, g + 1):
            chain.append((p[0] + j * d[0] // g, p[1] + j * d[1] // g))
    return chain


def sail_of(c: Cone) -> Sail:
    chain = sail_chain(c.u1, c.u2)
    functionals = tuple(
        _integral(edge_functional(chain[i - 1], chain[i])) for i in range(1, len(chain))
    )
    return Sail(tuple(chain), c.m_sigma, functionals)


def _integral(m: Point) -> Point:
    if m[0].denominator != 1 or m[1].denominator != 1:
        raise ArithmeticError(f"sail functional {m} is not integral")
    return (m[0].numerator, m[1].numerator)


def sail_complement_volume(c: Cone) -> Fraction:
    """Normalized volume of the region between the sail chain and ``u1 u2``.

    Shoelace over the closed chain ``b_0, ..., b_k``.
    """
    chain = sail_chain(c.u1, c.u2)
    n = len(chain)
    return Fraction(sum(det2(chain[i], chain[(i + 1) % n]) for i in range(n)))


@dataclass(frozen=True)
class CompleteUnimodularFan:
    """Rays in CCW order with ``v_prev + v_next = a * v`` at each ray."""

    rays: Tuple[Point, ...]
    a_values: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.rays)
        if n < 3 or len(self.a_values) != n:
            raise ValueError("a complete fan needs at least three rays")
        for i in range(n):
            if det2(self.rays[i], self.rays[(i + 1) % n]) != 1:
                raise ValueError("consecutive rays must span unimodular cones")
        if winding_number(self.rays) != 1:
            raise ValueError("rays must wind once around the origin")
        for i in range(n):
            left, v, right = self.rays[i - 1], self.rays[i], self.rays[(i + 1) % n]
            if add(left, right) != scale(self.a_values[i], v):
                raise ValueError(f"a-value mismatch at ray {v}")

    def cones(self) -> List[Tuple[Point, Point]]:
        n = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % n]) for i in range(n)]

    def to_json(self) -> dict:
        return {"rays": format_points(self.rays), "a_values": list(self.a_values)}


def winding_number(rays) -> int:
    """Number of CCW turns made by consecutive rays (exact, via half-turn counts).

    Each step between consecutive rays must turn by less than a half turn.
    """
    crossings = 0
    n = len(rays)
    for i in range(n):
        p, q = rays[i], rays[(i + 1) % n]
        # count crossings of the positive x-axis, CCW direction
        if p[1] < 0 <= q[1] and det2(p, q) > 0:
            crossings += 1
        elif q[1] < 0 <= p[1] and det2(p, q) < 0:
            crossings -= 1
    return crossings


def fan_a_value(left: Point, v: Point, right: Point) -> int:
    s = add(left, right)
    # s = a*v; v primitive so one coordinate of v is nonzero
    if v[0] != 0:
        a, r = divmod(s[0], v[0])
    else:
        a, r = divmod(s[1], v[1])
    if r != 0 or scale(a, v) != s:
        raise ArithmeticError(f"{left} + {right} is not a multiple of {v}")
    return a


def refined_fan(p: Polygon) -> CompleteUnimodularFan:
    """Rays through every lattice point on the boundaries of all sails."""
    rays: List[Point] = []
    for c in spanning_fan(p):
        chain = sail_chain(c.u1, c.u2)
        rays.extend(reversed(chain[1:]))  # u1, ..., b_1; u2 starts the next cone
    n = len(rays)
    a_values = tuple(fan_a_value(rays[i - 1], rays[i], rays[(i + 1) % n]) for i in range(n))
    return CompleteUnimodularFan(tuple(rays), a_values)


def cone_report_fields(c: Cone) -> dict:
    """Cone parameters plus sail data, serialized."""
    s = sail_of(c)
    out = c.to_json()
    out.update(s.to_json())
    out["sail_complement_volume"] = format_rational(sail_complement_volume(c))
    return out
