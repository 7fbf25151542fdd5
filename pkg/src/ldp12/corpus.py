"""Deterministic test corpora: random LDP polygons, random cones, and the
brute-force list of reflexive polygons up to unimodular equivalence."""

from __future__ import annotations

import json
import random
from itertools import combinations
from math import gcd
from typing import Iterable, List, Optional, Set, Tuple

from .fan import Cone, cone_params, normal_form_cone
from .lattice import (
    IDENTITY,
    Matrix,
    apply_matrix,
    apply_unimodular,
    as_lattice,
    complete_basis,
    det2,
    matmul,
)
from .polygon import (
    Polygon,
    contains_origin_strictly,
    convex_hull,
    pick_count,
    polygon_from_points,
    polygon_from_json,
)

RETRY_BUDGET = 10_000

# generators of GL(2, Z)
SHEAR: Matrix = ((1, 1), (0, 1))
ROTATION: Matrix = ((0, -1), (1, 0))
REFLECTION: Matrix = ((0, 1), (1, 0))


def random_ldp(seed: int, coordinate_bound: int, max_vertices: int = 6) -> Polygon:
    """Hull of random primitive points in ``[-B, B]^2`` around the origin."""
    if coordinate_bound < 1:
        raise ValueError("coordinate_bound must be at least 1")
    if max_vertices < 3:
        raise ValueError("max_vertices must be at least 3")
    rng = random.Random(seed)
    B = coordinate_bound
    for _ in range(RETRY_BUDGET):
        n = rng.randint(3, max_vertices)
        pts = set()
        while len(pts) < n:
            v = (rng.randint(-B, B), rng.randint(-B, B))
            if v != (0, 0) and gcd(*v) == 1:
                pts.add(v)
        hull = convex_hull(pts)
        if len(hull) < 3:
            continue
        p = polygon_from_points(hull)
        if contains_origin_strictly(p):
            return p
    raise RuntimeError(f"no LDP polygon found after {RETRY_BUDGET} attempts (seed={seed})")


def random_unimodular(rng: random.Random, steps: int = 3, max_shear: int = 2) -> Matrix:
    m = IDENTITY
    for _ in range(steps):
        t = rng.randint(-max_shear, max_shear)
        g = rng.choice([((1, t), (0, 1)), ((1, 0), (t, 1)), ROTATION, REFLECTION])
        m = matmul(g, m)
    return m


def random_cone(seed: int, max_V: int, scramble: bool = True) -> Cone:
    """Normal-form cone with random coprime (V, a), optionally moved by a random
    orientation-preserving unimodular map."""
    if max_V < 1:
        raise ValueError("max_V must be at least 1")
    rng = random.Random(seed)
    V = rng.randint(1, max_V)
    if V == 1:
        a = 0
    else:
        a = rng.choice([a for a in range(1, V) if gcd(a, V) == 1])
    c = normal_form_cone(V, a)
    if not scramble:
        return c
    m = random_unimodular(rng)
    u1, u2 = apply_unimodular(m, c.u1), apply_unimodular(m, c.u2)
    if det2(u1, u2) < 0:
        # orientation-reversing map: swap roles to keep det positive
        m = matmul(REFLECTION, m)
        u1, u2 = apply_unimodular(m, c.u1), apply_unimodular(m, c.u2)
    return cone_params(u1, u2)


def _to_standard(v) -> Matrix:
    """Unimodular ``g`` with ``g v = (d, 0)``, ``d = gcd(v)``."""
    d = gcd(*v)
    p, q = v[0] // d, v[1] // d
    s, t = complete_basis((p, q))
    # columns (p, q), (s, t) have det 1; g is the inverse of that matrix
    return ((t, -s), (-q, p))


def normal_form(p: Polygon) -> Tuple[Tuple[int, int], ...]:
    """Canonical vertex tuple of ``p`` under linear GL(2, Z) maps.

    Every choice of a vertex and a traversal direction determines a unique
    unimodular map sending that vertex to ``(d, 0)`` and the following vertex
    into ``{(x, y) : y > 0, 0 <= x < y}``; the lexicographically smallest
    image wins.
    """
    vs = [as_lattice(v) for v in p.vertices]
    n = len(vs)
    best = None
    for direction in (1, -1):
        for i in range(n):
            v, nxt = vs[i], vs[(i + direction) % n]
            g = _to_standard(v)
            x, y = apply_matrix(g, nxt)
            if y < 0:
                g = matmul(((1, 0), (0, -1)), g)
                y = -y
            if y == 0:
                continue  # v and its neighbour are collinear with the origin
            g = matmul(((1, -(x // y)), (0, 1)), g)
            image = tuple(sorted(apply_matrix(g, u) for u in vs))
            if best is None or image < best:
                best = image
    return best


def equivalent(p: Polygon, q: Polygon) -> bool:
    return len(p) == len(q) and normal_form(p) == normal_form(q)


def _only_origin_inside(p: Polygon) -> bool:
    interior, _ = pick_count(p)
    return interior == 1 and contains_origin_strictly(p)


def reflexive_catalogue(box: int = 3) -> List[Polygon]:
    """All lattice polygons whose only interior lattice point is the origin,
    up to GL(2, Z), found inside ``[-box, box]^2``.

    Seeds are triangles and quadrilaterals with the origin as sole interior
    point; the search then keeps adding single lattice points while that
    property survives.  Every such polygon contains a seed among its own
    lattice points, and every intermediate hull keeps the property, so the
    closure reaches all of them.
    """
    pts = [(x, y) for x in range(-box, box + 1) for y in range(-box, box + 1) if (x, y) != (0, 0)]
    seen: Set[Tuple] = set()
    found: List[Polygon] = []

    def visit(points) -> Optional[Polygon]:
        hull = convex_hull(points)
        if len(hull) < 3:
            return None
        key = tuple(sorted(hull))
        if key in seen:
            return None
        seen.add(key)
        poly = polygon_from_points(hull)
        if not _only_origin_inside(poly):
            return None
        found.append(poly)
        return poly

    for size in (3, 4):
        for combo in combinations(pts, size):
            if _straddles_origin(combo):
                visit(combo)
    stack = list(found)
    while stack:
        poly = stack.pop()
        for q in pts:
            grown = visit(poly.vertices + (q,))
            if grown is not None:
                stack.append(grown)

    classes = {}
    for poly in found:
        key = normal_form(poly)
        if key not in classes:
            classes[key] = polygon_from_points(key)
    return [classes[k] for k in sorted(classes, key=lambda k: (len(k), k))]


def _straddles_origin(combo) -> bool:
    # necessary for the origin to be interior: both signs in each coordinate
    xs = [c[0] for c in combo]
    ys = [c[1] for c in combo]
    return min(xs) < 0 < max(xs) and min(ys) < 0 < max(ys)


def write_corpus(polygons: Iterable[Polygon], path) -> None:
    """Newline-delimited polygon JSON."""
    with open(path, "w") as fh:
        for p in polygons:
            fh.write(json.dumps(p.to_json()) + "\n")


def read_corpus(path) -> List[Polygon]:
    with open(path) as fh:
        return [polygon_from_json(line) for line in fh if line.strip()]
