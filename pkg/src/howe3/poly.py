"""Dense univariate polynomials over a field context.

A polynomial is a list of field elements, little-endian (``f[i]`` is the
coefficient of ``x**i``).  The zero polynomial is the empty list.  Every
function here accepts untrimmed input and returns trimmed output.
"""

from __future__ import annotations


def trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def degree(f) -> int:
    return len(trim(f)) - 1


def from_ints(ctx, coeffs):
    return trim(ctx(c) for c in coeffs)


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return trim(out)


def neg(f):
    return [-c for c in f]


def sub(f, g):
    return add(f, neg(g))


def scale(f, c):
    return trim(c * x for x in f)


def mul(f, g):
    f, g = trim(f), trim(g)
    if not f or not g:
        return []
    zero = f[0].ctx.zero
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(f, g):
    """Quotient and remainder of ``f`` by nonzero ``g``."""
    f, g = trim(f), trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f) < len(g):
        return [], f
    lead_inv = g[-1].inv()
    rem = list(f)
    quot = [g[0].ctx.zero] * (len(f) - len(g) + 1)
    dg = len(g) - 1
    for d in range(len(f) - 1, dg - 1, -1):
        c = rem[d]
        if not c:
            continue
        c = c * lead_inv
        quot[d - dg] = c
        for i, gi in enumerate(g):
            rem[d - dg + i] = rem[d - dg + i] - c * gi
    return trim(quot), trim(rem[:dg])


def mod(f, g):
    return divmod_(f, g)[1]


def monic(f):
    f = trim(f)
    if not f:
        return f
    return scale(f, f[-1].inv())


def gcd(f, g):
    """Monic gcd; ``gcd(0, 0) == []``."""
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(f, g)
    return monic(f)


def powmod(f, e: int, m):
    ctx = m[-1].ctx
    result = [ctx.one]
    base = mod(f, m)
    while e:
        if e & 1:
            result = mod(mul(result, base), m)
        e >>= 1
        if e:
            base = mod(mul(base, base), m)
    return result


def evaluate(f, x):
    acc = x.ctx.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f):
    return trim(c * i for i, c in enumerate(f) if i)


def is_squarefree(f) -> bool:
    return degree(gcd(f, derivative(f))) == 0


def roots(f, ctx):
    """All distinct roots of ``f`` lying in ``ctx``, in canonical element order.

    Coefficients must already live in ``ctx``.  Equal-degree splitting with a
    deterministic sequence of shifts (elements of ``ctx`` in index order), so
    the result does not depend on any random state.
    """
    f = monic(f)
    if len(f) <= 1:
        return []
    x = [ctx.zero, ctx.one]
    # product of the linear factors of f over ctx
    g = gcd(f, sub(powmod(x, ctx.q, f), x))
    found = []
    _split(g, ctx, found)
    return sorted(found)


def _split(g, ctx, out):
    d = degree(g)
    if d <= 0:
        return
    if d == 1:
        out.append(-g[0] * g[1].inv())
        return
    half = (ctx.q - 1) // 2
    for idx in range(1, ctx.q):
        shifted = [ctx.from_index(idx), ctx.one]
        h = gcd(g, sub(powmod(shifted, half, g), [ctx.one]))
        if 0 < degree(h) < d:
            _split(h, ctx, out)
            _split(divmod_(g, h)[0], ctx, out)
            return
    raise AssertionError("splitting failed for a product of distinct linear factors")
