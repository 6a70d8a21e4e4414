"""The even Clifford algebra acting on tangent models, blockwise."""

from fractions import Fraction

from cliffgrass.clifford import EvenCliffordElement, TangentModel, lambda2_image_check, morphism_check, phi_apply
from cliffgrass.octonion import Octonion

e = EvenCliffordElement.blade
a = e(8, (1, 2)) + EvenCliffordElement(8, {(3, 4, 6, 7): Fraction(1, 2)})
b = e(8, (2, 5))
o = Octonion.basis
t = TangentModel.from_octonion_pairs([(o("1"), o("h")), (o("i") + o("f"), Octonion.zero())])

left = phi_apply("rank8", a, phi_apply("rank8", b, t))
right = phi_apply("rank8", a * b, t)
print("phi(a) phi(b) t == phi(ab) t:", left == right)

for kind in ("rank8", "rank6", "rank5"):
    checks = [morphism_check(kind, n) for n in (1, 2, 3)]
    rep = lambda2_image_check(kind, 2)
    print(f"{kind}: morphism for n=1,2,3 {checks}; Lambda^2 image skew: {rep.passed} (span {rep.dimension})")
