"""
Arithmetic in the tower F_p, F_{p^2}, F_{p^4}, F_{p^8}
======================================================

Elements are coefficient vectors in the power basis of a fixed generator t.
Their canonical index sum(c_i p^(k-1-i)) gives a total order, which is what
makes every output of the package reproducible.
"""

# %%
# Build F_{7^2}; the modulus is t^2 - n for the least non-residue n.
from howe3.field_tower import embed, format_element, is_square, make_ctx, sqrt, sqrt_lift

F49 = make_ctx(7, 2)
print("modulus coefficients:", F49.modulus)
t = F49.gen
print("t^2 =", t * t)

# %%
# Canonical square roots: of the two roots, the one with the smaller index.
x = F49("2+3*t") ** 2
r = sqrt(x)
print(format_element(x), "is a square:", is_square(x), "root:", r, "check:", r * r == x)

# %%
# Non-squares get their roots one level up the tower.
n = F49.nonresidue * t
s = sqrt_lift(n)
print("sqrt of", n, "lives in F_{7^%d}:" % s.ctx.k, s)
print("embedding agrees:", s * s == embed(n, s.ctx))

# %%
# The vectorized kernel works on whole fields at once.
V = F49.vec
xs = V.elements()
print("number of nonzero squares:", int((V.chi(xs) == 1).sum()))
