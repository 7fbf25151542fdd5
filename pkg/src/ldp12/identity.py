"""Both sides of the lattice-point identity, per cone and per polygon.

Also holds the bookkeeping quantities behind the reduction of the global
identity to the cone-wise one: the 12-sum of a complete unimodular fan, the
signed dual-edge chain, and the triangle volumes between ``m_sigma`` and the
sail functionals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .dedekind import cone_lhs_closed_form
from .fan import (
    Cone,
    CompleteUnimodularFan,
    cone_report_fields,
    refined_fan,
    sail_complement_volume,
    sail_of,
    spanning_fan,
)
from .lattice import Point, det2, edge_functional, format_rational, pair, sub
from .polygon import (
    Polygon,
    dual,
    is_reflexive,
    kappa,
    lattice_points,
    normalized_volume,
    require_ldp,
)


def _open_interval(A: int, c: int, lo: int, hi: int) -> Tuple[int, int]:
    """Narrow integer range [lo, hi] to the x with ``A*x + c > 0``."""
    if A > 0:
        return max(lo, (-c) // A + 1), hi
    if A < 0:
        return lo, min(hi, (c - 1) // (-A))
    return (lo, hi) if c > 0 else (1, 0)


def cone_interior_points(c: Cone) -> List[Tuple[int, int]]:
    """Lattice points in the open triangle ``conv(0, u1, u2)``, scanned row by row."""
    (p, q), (r, t), V = c.u1, c.u2, c.V
    xs = (0, p, r)
    ys = (0, q, t)
    out = []
    for y in range(min(ys), max(ys) + 1):
        # det2(n, u2) = t*x - r*y > 0, det2(u1, n) = p*y - q*x > 0,
        # V - det2(n, u2) - det2(u1, n) > 0
        lo, hi = min(xs), max(xs)
        lo, hi = _open_interval(t, -r * y, lo, hi)
        lo, hi = _open_interval(-q, p * y, lo, hi)
        lo, hi = _open_interval(q - t, V + r * y - p * y, lo, hi)
        out.extend((x, y) for x in range(lo, hi + 1))
    return out


def cone_lhs_direct(c: Cone, points=None) -> Fraction:
    """``12 * sum (kappa(n) + 1)^2`` over the open triangle, kappa = <m_sigma, .>."""
    m = c.m_sigma
    if points is None:
        points = cone_interior_points(c)
    return 12 * sum(((pair(m, n) + 1) ** 2 for n in points), Fraction(0))


def triangle_volumes(c: Cone) -> List[Fraction]:
    """``nvol(conv(m_sigma, m*_i, m*_{i+1}))`` for i = 1..k-1."""
    s = sail_of(c)
    m = s.m_sigma
    fs = s.functionals
    return [abs(Fraction(det2(sub(fs[i], m), sub(fs[i + 1], m)))) for i in range(len(fs) - 1)]


def cone_rhs(c: Cone) -> Fraction:
    return sail_complement_volume(c) + sum(triangle_volumes(c), Fraction(0))


@dataclass
class ConeReport:
    cone: Cone
    lhs_direct: Fraction
    lhs_closed_form: Fraction
    rhs: Fraction
    complement_volume: Fraction
    triangle_volumes: List[Fraction]
    interior_points: List[Tuple[int, int]]

    @property
    def ok(self) -> bool:
        return self.lhs_direct == self.lhs_closed_form == self.rhs

    def to_json(self) -> dict:
        out = cone_report_fields(self.cone)
        out.update(
            {
                "interior_points": [list(n) for n in self.interior_points],
                "lhs_direct": format_rational(self.lhs_direct),
                "lhs_closed_form": format_rational(self.lhs_closed_form),
                "rhs": format_rational(self.rhs),
                "rhs_triangles": [format_rational(t) for t in self.triangle_volumes],
                "ok": self.ok,
            }
        )
        return out


def verify_cone(c: Cone) -> ConeReport:
    points = cone_interior_points(c)
    complement = sail_complement_volume(c)
    triangles = triangle_volumes(c)
    return ConeReport(
        cone=c,
        lhs_direct=cone_lhs_direct(c, points),
        lhs_closed_form=cone_lhs_closed_form(c.V, c.a),
        rhs=complement + sum(triangles, Fraction(0)),
        complement_volume=complement,
        triangle_volumes=triangles,
        interior_points=points,
    )


def global_lhs(p: Polygon) -> Fraction:
    require_ldp(p)
    return 12 * sum(((kappa(p, n) + 1) ** 2 for n in lattice_points(p)), Fraction(0))


def global_rhs(p: Polygon) -> Fraction:
    require_ldp(p)
    return normalized_volume(p) + normalized_volume(dual(p))


def twelve_theorem_sum(f: CompleteUnimodularFan) -> int:
    return sum(3 - a for a in f.a_values)


def dual_chain(f: CompleteUnimodularFan) -> List[Tuple[Point, Point]]:
    """Dual edge of each ray: from the functional of the cone before it to the one after."""
    cone_functionals = [edge_functional(u, v) for u, v in f.cones()]
    n = len(cone_functionals)
    return [(cone_functionals[i - 1], cone_functionals[i]) for i in range(n)]


def dual_chain_sum(p: Polygon) -> Tuple[List[int], int]:
    """Signed determinants of the dual edges, in ray order, and their total."""
    f = refined_fan(p)
    dets = [_as_int(det2(start, end)) for start, end in dual_chain(f)]
    return dets, sum(dets)


def _as_int(q) -> int:
    q = Fraction(q)
    if q.denominator != 1:
        raise ArithmeticError(f"{q} is not an integer")
    return q.numerator


@dataclass
class DecompositionReport:
    dual_volume: Fraction
    ray_count: int
    sail_union_volume: Fraction
    triangle_total: Fraction
    chain_dets: List[int]
    chain_total: int
    twelve_sum: int

    @property
    def sail_union_ok(self) -> bool:
        return self.sail_union_volume == self.ray_count

    @property
    def difference_ok(self) -> bool:
        """12 = nvol(dual) + nvol(union of sails) - triangle total."""
        return 12 == self.dual_volume + self.sail_union_volume - self.triangle_total

    @property
    def chain_ok(self) -> bool:
        """Signed dual-edge total = nvol(dual) - triangle total = sum(2 - a)."""
        return (
            self.chain_total == self.dual_volume - self.triangle_total
            and self.chain_total == self.twelve_sum - self.ray_count
        )

    @property
    def ok(self) -> bool:
        return self.sail_union_ok and self.difference_ok and self.chain_ok

    def to_json(self) -> dict:
        return {
            "dual_volume": format_rational(self.dual_volume),
            "ray_count": self.ray_count,
            "sail_union_volume": format_rational(self.sail_union_volume),
            "triangle_total": format_rational(self.triangle_total),
            "chain_dets": self.chain_dets,
            "chain_total": self.chain_total,
            "sail_union_ok": self.sail_union_ok,
            "difference_ok": self.difference_ok,
            "chain_ok": self.chain_ok,
        }


def verify_decomposition(p: Polygon) -> DecompositionReport:
    require_ldp(p)
    cones = spanning_fan(p)
    f = refined_fan(p)
    dets, total = dual_chain_sum(p)
    return DecompositionReport(
        dual_volume=normalized_volume(dual(p)),
        ray_count=len(f.rays),
        sail_union_volume=sum((c.V - sail_complement_volume(c) for c in cones), Fraction(0)),
        triangle_total=sum((t for c in cones for t in triangle_volumes(c)), Fraction(0)),
        chain_dets=dets,
        chain_total=total,
        twelve_sum=twelve_theorem_sum(f),
    )


@dataclass
class VerificationReport:
    polygon: Polygon
    lhs: Fraction
    rhs: Fraction
    nvol: Fraction
    nvol_dual: Fraction
    reflexive: bool
    cones: List[ConeReport]
    decomposition: DecompositionReport
    twelve_sum: int
    reduction_traces: Optional[list] = field(default=None)

    @property
    def global_identity_ok(self) -> bool:
        return self.lhs == self.rhs

    @property
    def cone_identity_ok(self) -> bool:
        return all(r.ok for r in self.cones)

    @property
    def additivity_ok(self) -> bool:
        return self.lhs == 12 + sum((r.lhs_direct for r in self.cones), Fraction(0))

    @property
    def bound_ok(self) -> bool:
        """rhs >= 12 with equality exactly for reflexive polygons."""
        return self.rhs >= 12 and ((self.rhs == 12) == self.reflexive)

    @property
    def decomposition_ok(self) -> bool:
        return self.decomposition.ok

    @property
    def twelve_ok(self) -> bool:
        return self.twelve_sum == 12

    @property
    def ok(self) -> bool:
        return (
            self.global_identity_ok
            and self.cone_identity_ok
            and self.additivity_ok
            and self.bound_ok
            and self.decomposition_ok
            and self.twelve_ok
        )

    def to_json(self, per_cone: bool = False) -> dict:
        out = {
            "polygon": self.polygon.to_json(),
            "dual": dual(self.polygon).to_json(),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "nvol": format_rational(self.nvol),
            "nvol_dual": format_rational(self.nvol_dual),
            "reflexive": self.reflexive,
            "twelve_sum": self.twelve_sum,
            "decomposition": self.decomposition.to_json(),
            "global_identity_ok": self.global_identity_ok,
            "cone_identity_ok": self.cone_identity_ok,
            "additivity_ok": self.additivity_ok,
            "bound_ok": self.bound_ok,
            "decomposition_ok": self.decomposition_ok,
            "twelve_ok": self.twelve_ok,
            "ok": self.ok,
        }
        if per_cone:
            out["per_cone"] = [r.to_json() for r in self.cones]
        if self.reduction_traces is not None:
            out["reduction_traces"] = self.reduction_traces
        return out


def verify_global(p: Polygon) -> VerificationReport:
    """Run every check on an LDP polygon."""
    require_ldp(p)
    nvol = normalized_volume(p)
    nvol_dual = normalized_volume(dual(p))
    return VerificationReport(
        polygon=p,
        lhs=global_lhs(p),
        rhs=nvol + nvol_dual,
        nvol=nvol,
        nvol_dual=nvol_dual,
        reflexive=is_reflexive(p),
        cones=[verify_cone(c) for c in spanning_fan(p)],
        decomposition=verify_decomposition(p),
        twelve_sum=twelve_theorem_sum(refined_fan(p)),
    )
