"""One cone of the spanning fan: its sail, functionals and the two sides of
the cone-wise identity."""

from ldp12 import cone_params, sail_of, verify_cone
from ldp12.lattice import format_point, format_rational

c = cone_params((3, 2), (-1, 2))
print(f"cone on u1={c.u1}, u2={c.u2}: V={c.V}, a={c.a}, w={c.w}")

s = sail_of(c)
print("sail chain from u2 to u1:", list(s.boundary))
print("m_sigma:", format_point(s.m_sigma))
print("sail functionals:", list(s.functionals))

r = verify_cone(c)
print("\ninterior points:", r.interior_points)
print("direct sum     :", format_rational(r.lhs_direct))
print("Dedekind form  :", format_rational(r.lhs_closed_form))
print(
    "sail side      :",
    format_rational(r.complement_volume),
    "+",
    " + ".join(format_rational(t) for t in r.triangle_volumes),
    "=",
    format_rational(r.rhs),
)
