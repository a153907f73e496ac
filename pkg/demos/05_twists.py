"""
Quadratic twists and field extensions
=====================================

A superspecial curve over F_{p^2} is maximal or minimal, fixed by p mod 4.
Twisting by a non-square flips the verdict; over F_{p^4} only the square
class of the twist matters.
"""

# %%
from howe3.field_tower import is_square, make_ctx
from howe3.point_count import TwistSpec, twist_verdict
from howe3.standard_form import CurveAB

F = make_ctx(7, 2)
c = CurveAB(F(3), F(4))
for e in (1, 2):
    big = make_ctx(7, 2 * e)
    for eps in (big.one, big.nonresidue):
        rep = twist_verdict(c, TwistSpec(eps, e))
        print(f"e={e} eps square={is_square(eps)!s:5}  N={rep.count.N:6d}  {rep.count.verdict.value}"
              f"  predicted {rep.predicted.value}")
