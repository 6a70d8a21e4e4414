"""Octonion right multiplication, the sixteen-dimensional Clifford generators and spin(8)."""

from cliffgrass.exact import ExactMatrix, span_dimension
from cliffgrass.octonion import OCTONION_BASIS, Octonion, right_mult_matrix
from cliffgrass.spin import build_m_u, clifford_products, lie_closure_report, spin8_basis

o = Octonion.basis

print("i*j =", o("i") * o("j"), "  j*i =", o("j") * o("i"))
print("(ij)e =", (o("i") * o("j")) * o("e"), "  i(je) =", o("i") * (o("j") * o("e")))

print("\nR_e, right multiplication by e:")
print(right_mult_matrix(o("e")).pretty())

ident = ExactMatrix.identity(16)
gens = [build_m_u(u) for u in OCTONION_BASIS]
ok = all(a @ b + b @ a == (ident.scale(-2) if a is b else ident.scale(0)) for a in gens for b in gens)
print("\nm_u m_v + m_v m_u = -2<u,v> on the basis:", ok)
print("span of all products of the m_u:", span_dimension(clifford_products(gens)))

rep = lie_closure_report([g.matrix for g in spin8_basis()])
print(f"the 28 m_(u,v): dimension {rep.dimension}, closed under brackets: {rep.closed}")
