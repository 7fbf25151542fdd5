"""Peel the (V, a) = (8, 3) cone down to a unimodular one, step by step."""

from fractions import Fraction

from ldp12 import cone_lhs_closed_form, normal_form_cone, reduction_chain, verify_step

c = normal_form_cone(8, 3)
total = Fraction(0)
for step in reduction_chain(c):
    b, a = step.before, step.after
    total += step.delta_lhs
    print(
        f"case {step.case_tag:<2} lambda={step.lam}  ({b.V},{b.a}) -> ({a.V},{a.a})"
        f"  delta={step.delta_lhs}  checks={'ok' if verify_step(step) else 'FAILED'}"
    )
print(f"\nsum of deltas {total} == closed form {cone_lhs_closed_form(8, 3)}")
