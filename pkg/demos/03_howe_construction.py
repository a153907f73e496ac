"""
From two Legendre curves to a genus-3 hyperelliptic curve
=========================================================

Gluing E1: y^2 = x(x-1)(x-l1) and E2: y^2 = x(x-mu)(x-mu l2) over their
shared 2-torsion gives a Howe curve.  When mu^2 l2 = l1 it is hyperelliptic
and can be put in the form y^2 = (x^4 - a x^2 + 1)(x^4 - b x^2 + 1).
"""

# %%
from howe3.field_tower import make_ctx
from howe3.howe import HoweInput, classify_genus, discriminant, is_hyperelliptic_mu, lambda3
from howe3.standard_form import CurveAB, ab_from_sqrt_lambdas, legendre_triple_of

F = make_ctx(11, 2)
h = HoweInput(F(4), F(9), F(3))  # 3^2 * 9 = 81 = 4
print("genus:", classify_genus(h).genus, "hyperelliptic:", is_hyperelliptic_mu(h))
l3 = lambda3(h)
print("lambda3 =", l3, "D =", discriminant(h.lambda1, h.lambda2, l3))

# %%
# Going the other way: recover (a, b) from square roots of lambda1, lambda2.
c = CurveAB(F(3), F("2+t"))
lt = legendre_triple_of(c)
print("lambdas:", [str(x) for x in lt.lambdas])
print("round trip:", ab_from_sqrt_lambdas(lt.sqrt_lambda1, lt.sqrt_lambda2))
