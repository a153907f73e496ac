"""
Superspeciality through the Cartier-Manin matrix
================================================

y^2 = f(x) with deg f = 8 is superspecial exactly when its 3x3 Hasse-Witt
matrix vanishes.  The entries are coefficients of f^((p-1)/2).
"""

# %%
from howe3 import poly
from howe3.field_tower import make_ctx
from howe3.supersingular import hasse_poly, hasse_witt, superspecial_grid, supersingular_lambdas

for p in (7, 17, 23):
    ctx = make_ctx(p, 2)
    f = poly.from_ints(ctx, [-1, 0, 0, 0, 0, 0, 0, 0, 1])
    print(f"p = {p:2d}, p mod 8 = {p % 8}: x^8 - 1 superspecial -> {hasse_witt(f).is_zero}")

# %%
# Supersingular Legendre parameters are the roots of the Deuring polynomial.
print("H_7 coefficients:", hasse_poly(7).coeffs)
print("supersingular lambdas at p = 11:", [str(l) for l in supersingular_lambdas(11)])

# %%
# The batched version sweeps every (a, b) in F_{p^2} x F_{p^2} in one pass.
grid = superspecial_grid(7)
print("superspecial pairs at p = 7:", int(grid.sum()), "of", grid.size)
