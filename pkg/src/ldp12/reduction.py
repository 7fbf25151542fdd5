"""Induction on cone volume: peel a cone down to a unimodular one.

Look at the last three sail points ``v, w', u1``. They satisfy
``u1 + v = lam * w'`` with ``lam >= 2``.  For ``lam > 2`` the smaller cone is
``(u1 - w', u2)`` (case I); for ``lam == 2`` it is ``(w', u2)`` (case II).
Each step changes both sides of the cone identity by the same amount, and
the closed forms for that amount are checked here against direct
recomputation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .dedekind import cone_lhs_closed_form
from .fan import Cone, cone_params, sail_chain, sail_complement_volume
from .identity import cone_rhs, triangle_volumes
from .lattice import add, format_rational, scale, sub


@dataclass(frozen=True)
class ReductionStep:
    case_tag: str
    before: Cone
    after: Cone
    lam: int
    delta_lhs: Fraction
    delta_rhs: Fraction

    def to_json(self) -> dict:
        return {
            "case": self.case_tag,
            "V": self.before.V,
            "a": self.before.a,
            "V_hat": self.after.V,
            "a_hat": self.after.a,
            "lambda": self.lam,
            "delta": format_rational(self.delta_lhs),
        }


def _multiple(s, v) -> int:
    k = s[0] // v[0] if v[0] != 0 else s[1] // v[1]
    if scale(k, v) != s:
        raise ArithmeticError(f"{s} is not a multiple of {v}")
    return k


def reduce_once(c: Cone) -> ReductionStep:
    if c.V == 1:
        raise ValueError("already reduced: cone is unimodular")
    chain = sail_chain(c.u1, c.u2)
    u1, w, v = chain[-1], chain[-2], chain[-3]
    lam = _multiple(add(u1, v), w)
    if lam < 2:
        raise ArithmeticError(f"sail is not convex at {w}: lambda = {lam}")
    if lam > 2:
        tag, new_u1 = "I", sub(u1, w)
    else:
        tag, new_u1 = "II", w
    after = cone_params(new_u1, c.u2)
    return ReductionStep(
        case_tag=tag,
        before=c,
        after=after,
        lam=lam,
        delta_lhs=cone_lhs_closed_form(c.V, c.a) - cone_lhs_closed_form(after.V, after.a),
        delta_rhs=cone_rhs(c) - cone_rhs(after),
    )


def reduction_chain(c: Cone) -> List[ReductionStep]:
    steps = []
    while c.V > 1:
        step = reduce_once(c)
        if step.after.V >= c.V:
            raise ArithmeticError("reduction did not decrease the volume")
        steps.append(step)
        c = step.after
    return steps


def delta_lhs_formula(case_tag: str, V_hat: int, a_hat: int) -> Fraction:
    """Change of the cone's left-hand side across one step, from (V_hat, a_hat)."""
    if case_tag == "I":
        return (a_hat + 1) * (1 - Fraction(a_hat + 1, V_hat * (V_hat + a_hat)))
    if case_tag == "II":
        d = V_hat - a_hat - 1
        return d * (1 + Fraction(d, V_hat * (2 * V_hat - a_hat)))
    raise ValueError(f"unknown case {case_tag!r}")


def delta_rhs_parts(case_tag: str, V_hat: int, a_hat: int):
    """(volume part, triangle part) of the right-hand side change."""
    if case_tag == "I":
        return Fraction(a_hat), 1 - Fraction((a_hat + 1) ** 2, V_hat * (V_hat + a_hat))
    if case_tag == "II":
        d = V_hat - a_hat - 1
        return Fraction(d), Fraction(d * d, V_hat * (2 * V_hat - a_hat))
    raise ValueError(f"unknown case {case_tag!r}")


def parameter_laws_hold(s: ReductionStep) -> bool:
    V, a, w = s.before.V, s.before.a, s.before.w
    Vh, ah, wh = s.after.V, s.after.a, s.after.w
    if s.case_tag == "I":
        return V == Vh + ah and a == ah and w == wh
    return V == 2 * Vh - ah and a == Vh and w == s.after.u1


@dataclass
class StepCheck:
    laws: bool
    lhs_closed: Fraction
    lhs_formula: Fraction
    rhs_direct: Fraction
    rhs_parts: Fraction
    volume_part_direct: Fraction
    triangle_part_direct: Fraction

    @property
    def ok(self) -> bool:
        return self.laws and self.lhs_closed == self.lhs_formula == self.rhs_direct == self.rhs_parts


def check_step(s: ReductionStep) -> StepCheck:
    """Recompute one step's deltas along two independent routes per side."""
    Vh, ah = s.after.V, s.after.a
    vol, tri = delta_rhs_parts(s.case_tag, Vh, ah)
    return StepCheck(
        laws=parameter_laws_hold(s),
        lhs_closed=cone_lhs_closed_form(s.before.V, s.before.a) - cone_lhs_closed_form(Vh, ah),
        lhs_formula=delta_lhs_formula(s.case_tag, Vh, ah),
        rhs_direct=cone_rhs(s.before) - cone_rhs(s.after),
        rhs_parts=vol + tri,
        volume_part_direct=sail_complement_volume(s.before) - sail_complement_volume(s.after),
        triangle_part_direct=sum(triangle_volumes(s.before), Fraction(0))
        - sum(triangle_volumes(s.after), Fraction(0)),
    )


def verify_step(s: ReductionStep) -> bool:
    return check_step(s).ok


def trace_json(steps: List[ReductionStep]) -> list:
    return [s.to_json() for s in steps]
