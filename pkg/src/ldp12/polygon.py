"""Convex lattice and rational polygons, their duals, volumes and lattice points.

A polygon is stored by its vertices in counterclockwise order, starting at the
lexicographically smallest vertex, so that two polygons are equal exactly when
their vertex tuples are.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterable, List, Sequence, Tuple

from .lattice import (
    Matrix,
    Number,
    Point,
    apply_matrix,
    det2,
    dual_action,
    edge_functional,
    format_point,
    is_primitive,
    matrix_det,
    pair,
    sub,
)


@dataclass(frozen=True)
class Polygon:
    """A strictly convex polygon with CCW vertices.

    Vertices with ``int`` entries make a lattice polygon; ``Fraction``
    entries make a rational one (such as the dual of an LDP polygon).
    """

    vertices: Tuple[Point, ...]

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 3:
            raise ValueError("degenerate polygon")
        n = len(vs)
        for i in range(n):
            a, b, c = vs[i - 1], vs[i], vs[(i + 1) % n]
            if det2(sub(b, a), sub(c, b)) <= 0:
                raise ValueError("vertices are not strictly convex in CCW order")
        if vs[0] != min(vs):
            raise ValueError("vertex list does not start at its smallest vertex")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def is_lattice(self) -> bool:
        return all(Fraction(c).denominator == 1 for v in self.vertices for c in v)

    def edges(self) -> List[Tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def to_json(self) -> dict:
        return {"vertices": [format_point(v) for v in self.vertices]}

    def __repr__(self):
        inner = ", ".join(f"({v[0]}, {v[1]})" for v in self.vertices)
        return f"Polygon([{inner}])"


def _canonical(vertices: Sequence[Point]) -> Polygon:
    vs = list(vertices)
    if _signed_double_area(vs) < 0:
        vs.reverse()
    k = vs.index(min(vs))
    return Polygon(tuple(vs[k:] + vs[:k]))


def _signed_double_area(vs: Sequence[Point]) -> Number:
    n = len(vs)
    return sum(det2(vs[i], vs[(i + 1) % n]) for i in range(n))


def convex_hull(points: Iterable[Point]) -> List[Point]:
    """Strict convex hull (monotone chain), CCW, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def half(seq):
        out: List[Point] = []
        for p in seq:
            while len(out) >= 2 and det2(sub(out[-1], out[-2]), sub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def polygon_from_points(points: Iterable[Point]) -> Polygon:
    """Convex hull of ``points`` as a canonical polygon."""
    hull = convex_hull(points)
    if len(hull) < 3:
        raise ValueError("degenerate polygon")
    return _canonical(hull)


def polygon_from_vertices(vertices: Sequence[Point]) -> Polygon:
    """Like :func:`polygon_from_points` but insists every point is a vertex."""
    p = polygon_from_points(vertices)
    if len(p) != len(set(vertices)):
        raise ValueError("input points are not in convex position")
    return p


def contains_origin_strictly(p: Polygon) -> bool:
    return all(det2(sub(b, a), sub((0, 0), a)) > 0 for a, b in p.edges())


def is_ldp(p: Polygon) -> bool:
    if not p.is_lattice or not contains_origin_strictly(p):
        return False
    return all(is_primitive(v) for v in p.vertices)


def require_ldp(p: Polygon) -> None:
    """Raise ``ValueError`` explaining why ``p`` is not an LDP polygon."""
    if not p.is_lattice:
        raise ValueError("polygon is not a lattice polygon")
    if not contains_origin_strictly(p):
        raise ValueError("origin is not an interior point")
    for v in p.vertices:
        if not is_primitive(v):
            raise ValueError(f"vertex not primitive: {list(v)}")


def dual(p: Polygon) -> Polygon:
    """The polar polygon ``{y : <y, x> >= -1 for all x in p}``.

    One vertex per edge of ``p``: the functional taking value -1 on both
    endpoints of that edge.
    """
    if not contains_origin_strictly(p):
        raise ValueError("dual undefined: origin is not an interior point")
    return _canonical([edge_functional(a, b) for a, b in p.edges()])


def normalized_volume(p: Polygon) -> Fraction:
    """Twice the Euclidean area."""
    return Fraction(_signed_double_area(p.vertices))


def _bounding_box(p: Polygon) -> Tuple[int, int, int, int]:
    xs = [v[0] for v in p.vertices]
    ys = [v[1] for v in p.vertices]
    return floor(min(xs)), ceil(max(xs)), floor(min(ys)), ceil(max(ys))


def lattice_points(p: Polygon) -> List[Tuple[int, int]]:
    """All lattice points of ``p`` (boundary included), sorted."""
    x0, x1, y0, y1 = _bounding_box(p)
    edges = p.edges()
    return [
        (x, y)
        for x in range(x0, x1 + 1)
        for y in range(y0, y1 + 1)
        if all(det2(sub(b, a), sub((x, y), a)) >= 0 for a, b in edges)
    ]


def boundary_lattice_count(p: Polygon) -> int:
    """Number of lattice points on the boundary of a lattice polygon."""
    return sum(gcd(b[0] - a[0], b[1] - a[1]) for a, b in p.edges())


def interior_lattice_points(p: Polygon) -> List[Tuple[int, int]]:
    edges = p.edges()
    return [
        n
        for n in lattice_points(p)
        if all(det2(sub(b, a), sub(n, a)) > 0 for a, b in edges)
    ]


def kappa(p: Polygon, n: Point) -> Fraction:
    """The piecewise linear function that is -1 on the boundary of ``p``.

    Equals ``-min{t >= 0 : n in t*p}`` and is linear on each cone over an edge
    of ``p``; outside ``p`` the same linear pieces are used.
    """
    if n[0] == 0 and n[1] == 0:
        return Fraction(0)
    for u1, u2 in p.edges():
        if det2(u1, n) >= 0 and det2(n, u2) >= 0:
            return Fraction(pair(edge_functional(u1, u2), n))
    raise ValueError("origin is not an interior point")


def is_reflexive(p: Polygon) -> bool:
    if not p.is_lattice or not contains_origin_strictly(p):
        return False
    return dual(p).is_lattice


def transform(p: Polygon, m: Matrix) -> Polygon:
    """Image of ``p`` under a unimodular linear map."""
    if abs(matrix_det(m)) != 1:
        raise ValueError(f"matrix {m} is not unimodular")
    return _canonical([apply_matrix(m, v) for v in p.vertices])


def transform_dual(p: Polygon, m: Matrix) -> Polygon:
    """Image of a polygon of functionals under the map induced by ``m``."""
    return transform(p, dual_action(m))


def pick_count(p: Polygon) -> Tuple[int, int]:
    """``(interior, boundary)`` lattice point counts via Pick's theorem."""
    b = boundary_lattice_count(p)
    twice_area = normalized_volume(p)
    i = (twice_area - b + 2) / 2
    return int(i), b


def polygon_from_json(data) -> Polygon:
    """Parse ``{"vertices": [[x, y], ...]}``; entries may be ints or "p/q"."""
    if isinstance(data, str):
        data = json.loads(data)
    try:
        raw = data["vertices"]
    except (TypeError, KeyError):
        raise ValueError('polygon JSON needs a "vertices" array') from None
    pts = []
    for v in raw:
        if not isinstance(v, (list, tuple)) or len(v) != 2:
            raise ValueError(f"bad vertex {v!r}")
        coords = []
        for c in v:
            if isinstance(c, (bool, float)) or not isinstance(c, (int, str)):
                raise ValueError(f"bad coordinate {c!r}")
            q = Fraction(c)
            coords.append(q.numerator if q.denominator == 1 else q)
        pts.append(tuple(coords))
    return polygon_from_points(pts)
