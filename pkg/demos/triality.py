"""Triality companions: each m_+ in spin(8) has a unique skew pair with m_+(xu) = m_-(x)u + x m_0(u)."""

from cliffgrass.octonion import Octonion
from cliffgrass.spin import spin8_basis, triality_companion

x, u = Octonion.basis("e"), Octonion([1, 2, 0, -1, 0, 0, 3, 1])


def act(m, z):
    return Octonion(m.apply(z.coords))


same = 0
for g in spin8_basis():
    t = triality_companion(g.matrix)
    holds = act(t.m_plus, x * u) == act(t.m_minus, x) * u + x * act(t.m_zero, u)
    same += t.m_plus == t.m_minus
    if g.label[0] == "1" or g.label == ("e", "h"):
        print(f"{g.name:10} m+ == m-: {str(t.m_plus == t.m_minus):5}  identity at sample point: {holds}")

print(f"\ngenerators with m+ = m-: {same} of 28")
