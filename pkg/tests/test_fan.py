from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given, settings

from ldp12.corpus import random_cone
from ldp12.fan import (
    CompleteUnimodularFan,
    Cone,
    cone_params,
    normal_form_cone,
    parallelogram_points,
    refined_fan,
    sail_chain,
    sail_chain_bruteforce,
    sail_complement_volume,
    sail_of,
    spanning_fan,
    winding_number,
)
from ldp12.lattice import add, apply_unimodular, det2, matrix_det, pair, scale
from ldp12.polygon import polygon_from_points
from strategies import cones, ldp_polygons, unimodular

F = Fraction
VOLUME_EIGHT_CONE = ((3, 2), (-1, 2))
# ((3, 2), (0, -1)) has det -3; with positive orientation the cone is:
COLLINEAR_CONE = ((0, -1), (3, 2))


def scan_residue(u1, u2):
    """Oracle: try every a in [0, V)."""
    V = det2(u1, u2)
    hits = [a for a in range(V) if (a * u1[0] + u2[0]) % V == 0 and (a * u1[1] + u2[1]) % V == 0]
    assert len(hits) == 1
    return hits[0]


def all_cones(max_V):
    for V in range(1, max_V + 1):
        for a in range(V) if V > 1 else [0]:
            if gcd(a, V) == 1:
                yield normal_form_cone(V, a)


def test_cone_params_examples():
    c = cone_params(*VOLUME_EIGHT_CONE)
    assert (c.V, c.a, c.w) == (8, 3, (1, 1))
    c = cone_params(*COLLINEAR_CONE)
    assert (c.V, c.a, c.w) == (3, 2, (1, 0))
    c = cone_params((1, 0), (0, 1))
    assert (c.V, c.a, c.w) == (1, 0, (0, 1))
    c = cone_params((1, 0), (2, 5))
    assert (c.V, c.a) == (5, 3)


def test_cone_params_errors():
    with pytest.raises(ValueError):
        cone_params((3, 2), (0, -1))  # negative determinant
    with pytest.raises(ValueError):
        cone_params((2, 0), (0, 1))
    with pytest.raises(ValueError):
        cone_params((1, 0), (2, 0))


def test_cone_invariants_are_enforced():
    with pytest.raises(ValueError):
        Cone((3, 2), (-1, 2), 8, 5, (1, 1))


def test_residue_matches_scan():
    for c in all_cones(40):
        if c.V > 1:
            assert c.a == scan_residue(c.u1, c.u2)


@given(cones)
def test_residue_matches_scan_on_scrambled_cones(c):
    if c.V > 1:
        assert c.a == scan_residue(c.u1, c.u2)


@given(cones, unimodular)
def test_cone_params_equivariance(c, m):
    assume(matrix_det(m) == 1)
    d = cone_params(apply_unimodular(m, c.u1), apply_unimodular(m, c.u2))
    assert (d.V, d.a) == (c.V, c.a)
    assert d.w == apply_unimodular(m, c.w)


def test_normal_form_cone():
    c = normal_form_cone(8, 3)
    assert (c.u1, c.u2) == ((1, 0), (5, 8))
    assert normal_form_cone(1, 0).u2 == (0, 1)


def test_spanning_fan(triangle, square, p2_triangle):
    cs = spanning_fan(triangle)
    assert len(cs) == 3
    assert {c.V for c in cs} == {8, 3, 1}
    assert [c.V for c in spanning_fan(square)] == [2, 2, 2, 2]
    assert [c.V for c in spanning_fan(p2_triangle)] == [1, 1, 1]


def test_spanning_fan_rejects_non_ldp():
    with pytest.raises(ValueError):
        spanning_fan(polygon_from_points([(2, 0), (0, 2), (-1, -1)]))


def brute_parallelogram(c):
    xs = [0, c.u1[0], c.u2[0], c.u1[0] + c.u2[0]]
    ys = [0, c.u1[1], c.u2[1], c.u1[1] + c.u2[1]]
    out = set()
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            s, t = det2((x, y), c.u2), det2(c.u1, (x, y))
            if 0 <= s < c.V and 0 <= t < c.V:
                out.add((x, y))
    return out


def test_parallelogram_examples():
    c = cone_params(*VOLUME_EIGHT_CONE)
    pts = parallelogram_points(c)
    assert len(pts) == 8 and pts[0] == (0, 0) and pts[1] == (1, 1)
    assert parallelogram_points(cone_params((1, 0), (0, 1))) == [(0, 0)]
    pts = parallelogram_points(cone_params((1, 0), (2, 5)))
    assert len(pts) == 5 and pts[1] == (1, 1)


@given(cones)
def test_parallelogram_matches_brute_force(c):
    pts = parallelogram_points(c)
    assert len(set(pts)) == c.V
    assert set(pts) == brute_parallelogram(c)


def test_sail_of_volume_eight_cone():
    s = sail_of(cone_params(*VOLUME_EIGHT_CONE))
    assert s.boundary == ((-1, 2), (0, 1), (1, 1), (3, 2))
    assert s.k == 3
    assert s.m_sigma == (0, F(-1, 2))
    assert s.functionals == ((-1, -1), (0, -1), (1, -2))


def test_sail_of_collinear_cone():
    s = sail_of(cone_params(*COLLINEAR_CONE))
    assert s.boundary == ((3, 2), (2, 1), (1, 0), (0, -1))
    assert s.functionals == ((-1, 1),) * 3
    assert s.k == 3


def test_sail_of_unimodular_cone():
    s = sail_of(cone_params((1, 0), (0, 1)))
    assert s.boundary == ((0, 1), (1, 0))
    assert s.k == 1
    assert s.functionals == ((-1, -1),)


def test_sail_complement_volume():
    assert sail_complement_volume(cone_params(*VOLUME_EIGHT_CONE)) == 5
    assert sail_complement_volume(cone_params((1, 0), (0, 1))) == 0
    assert sail_complement_volume(cone_params(*COLLINEAR_CONE)) == 0


def test_sail_matches_hull_oracle_up_to_volume_50():
    for c in all_cones(50):
        assert sail_chain(c.u1, c.u2) == sail_chain_bruteforce(c.u1, c.u2), (c.V, c.a)


@given(cones)
def test_sail_matches_hull_oracle_scrambled(c):
    assert sail_chain(c.u1, c.u2) == sail_chain_bruteforce(c.u1, c.u2)


@given(cones)
def test_sail_unimodularity_and_functionals(c):
    s = sail_of(c)
    b = s.boundary
    assert b[0] == c.u2 and b[-1] == c.u1
    for i in range(1, len(b)):
        assert det2(b[i], b[i - 1]) == 1
        m = s.functionals[i - 1]
        assert all(isinstance(x, int) for x in m)
        assert pair(m, b[i - 1]) == pair(m, b[i]) == -1
    assert pair(s.m_sigma, c.u1) == pair(s.m_sigma, c.u2) == -1


def test_first_and_last_functional_shape():
    # pairing with u1, u2 reads off the coordinates in the dual basis
    for c in all_cones(50):
        if c.V == 1:
            continue
        b_hat = pow(c.a, -1, c.V)
        fs = sail_of(c).functionals
        assert (pair(fs[0], c.u1), pair(fs[0], c.u2)) == (b_hat - c.V, -1)
        assert (pair(fs[-1], c.u1), pair(fs[-1], c.u2)) == (-1, c.a - c.V)


def test_refined_fan_of_triangle(triangle):
    f = refined_fan(triangle)
    expected_rays = [(3, 2), (1, 1), (0, 1), (-1, 2), (0, -1), (1, 0), (2, 1)]
    expected_a = [1, 3, 3, 0, -2, 2, 2]
    # same cyclic sequence; this implementation starts at the lex-min vertex
    i = f.rays.index((3, 2))
    assert list(f.rays[i:] + f.rays[:i]) == expected_rays
    assert list(f.a_values[i:] + f.a_values[:i]) == expected_a
    assert sum(3 - a for a in f.a_values) == 12


def test_refined_fan_simple_cases(diamond, hexagon):
    f = refined_fan(diamond)
    assert len(f.rays) == 4 and set(f.a_values) == {0}
    f = refined_fan(hexagon)
    assert len(f.rays) == 6 and set(f.a_values) == {1}


@given(ldp_polygons)
@settings(max_examples=60)
def test_refined_fan_is_complete_unimodular(p):
    f = refined_fan(p)
    n = len(f.rays)
    assert winding_number(f.rays) == 1
    for i in range(n):
        assert det2(f.rays[i], f.rays[(i + 1) % n]) == 1
        assert add(f.rays[i - 1], f.rays[(i + 1) % n]) == scale(f.a_values[i], f.rays[i])
    assert sum(3 - a for a in f.a_values) == 12


def test_fan_validation():
    with pytest.raises(ValueError):
        CompleteUnimodularFan(((1, 0), (0, 1), (-1, 0), (0, -1)), (0, 0, 0, 1))
    with pytest.raises(ValueError):
        # winds twice
        CompleteUnimodularFan(((1, 0), (0, 1), (-1, -1)) * 2, (-1,) * 6)


def test_random_cone_is_deterministic():
    assert random_cone(5, 30) == random_cone(5, 30)
