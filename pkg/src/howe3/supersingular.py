"""Supersingularity and superspeciality tests.

* the Deuring polynomial H_p(t) = sum_i binom((p-1)/2, i)^2 t^i,
* the Hasse invariant of a genus-1 model v^2 = g(u) with deg g = 4,
* the 3x3 Hasse-Witt (Cartier-Manin) matrix of y^2 = f(x) with deg f = 8:
  entry (i, j) is the coefficient of x^(i p - j) in f^((p-1)/2), i, j = 1..3.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import poly
from .errors import DegenerateError, HoweError, InvariantViolation, SingularCurveError
from .field_tower import FieldElem, embed, is_fourth_power, make_ctx, to_common
from .standard_form import nonsingular_ab, standard_octic


@dataclass(frozen=True)
class HassePoly:
    p: int
    coeffs: tuple[int, ...]

    def __call__(self, x: FieldElem) -> FieldElem:
        acc = x.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class HasseWittMatrix:
    entries: tuple[tuple[FieldElem, ...], ...]
    source: tuple[FieldElem, ...]

    @property
    def is_zero(self) -> bool:
        return not any(e for row in self.entries for e in row)

    def to_json(self):
        return [[str(e) for e in row] for row in self.entries]


@functools.lru_cache(maxsize=None)
def hasse_poly(p: int) -> HassePoly:
    n = (p - 1) // 2
    coeffs = []
    binom = 1
    for i in range(n + 1):
        coeffs.append(binom * binom % p)
        # binom(n, i+1) = binom(n, i) (n - i) / (i + 1)
        binom = binom * (n - i) * pow(i + 1, p - 2, p) % p
    return HassePoly(p, tuple(coeffs))


def is_supersingular_legendre(lam: FieldElem) -> bool:
    if not lam or lam == 1:
        raise DegenerateError("Legendre parameter must avoid 0 and 1")
    return not hasse_poly(lam.ctx.p)(lam)


@functools.lru_cache(maxsize=None)
def _supersingular_lambdas(p: int) -> tuple[FieldElem, ...]:
    ctx = make_ctx(p, 2)
    V = ctx.vec
    xs = V.elements()
    coeffs = V.asarray([ctx(c) for c in hasse_poly(p).coeffs])
    vals = V.poly_eval(coeffs, xs)
    idx = np.flatnonzero(V.is_zero(vals))
    roots = [ctx.from_index(int(i)) for i in idx]
    roots = [r for r in roots if r and r != 1]
    for r in roots:
        if not is_fourth_power(r):
            raise InvariantViolation(f"supersingular lambda {r} is not a fourth power in F_{p}^2")
    return tuple(roots)


def supersingular_lambdas(p: int) -> list[FieldElem]:
    """All roots of H_p in F_{p^2} (never 0 or 1), in canonical order."""
    return list(_supersingular_lambdas(p))


def _check_squarefree(f, what):
    if not poly.is_squarefree(f):
        raise SingularCurveError(f"{what} has repeated roots")


def _coefficients_of_power(f: list[FieldElem], e: int):
    ctx = f[0].ctx
    V = ctx.vec
    return V.poly_pow(V.asarray(f), e), V


def hasse_invariant_quartic(g: list[FieldElem]) -> FieldElem:
    """Coefficient of u^(p-1) in g^((p-1)/2); zero iff v^2 = g(u) is supersingular."""
    g = to_common(*g)
    g = poly.trim(g)
    if len(g) != 5:
        raise HoweError("expected a degree-4 polynomial")
    _check_squarefree(g, "quartic")
    p = g[0].ctx.p
    pw, V = _coefficients_of_power(g, (p - 1) // 2)
    return V.to_elems(pw[p - 1])[0]


def hasse_witt(f: list[FieldElem]) -> HasseWittMatrix:
    f = poly.trim(to_common(*f))
    if len(f) != 9:
        raise HoweError("expected a degree-8 polynomial")
    _check_squarefree(f, "octic")
    p = f[0].ctx.p
    pw, V = _coefficients_of_power(f, (p - 1) // 2)
    zero = V.ctx.zero
    rows = []
    for i in (1, 2, 3):
        row = []
        for j in (1, 2, 3):
            d = i * p - j
            row.append(V.to_elems(pw[d])[0] if d < len(pw) else zero)
        rows.append(tuple(row))
    return HasseWittMatrix(tuple(rows), tuple(f))


def is_superspecial(a: FieldElem, b: FieldElem) -> bool:
    a, b = to_common(a, b)
    if not nonsingular_ab(a, b):
        raise SingularCurveError(f"singular model: a={a}, b={b}")
    return hasse_witt(standard_octic(a, b)).is_zero


# --- batched Hasse-Witt for standard models -----------------------------------
#
# f(x) = F(x^2) with F(y) = (y^2 - a y + 1)(y^2 - b y + 1), so f^n = P_a(y) P_b(y)
# where P_c = (y^2 - c y + 1)^n.  The (i, j) entry is the coefficient of
# y^((ip - j)/2) when ip - j is even, and zero otherwise.

def half_powers(V, values):
    """Coefficient arrays of (y^2 - c y + 1)^((p-1)/2), shape (len(values), p, k)."""
    p = V.p
    n = (p - 1) // 2
    c = values.reshape(-1, 1, V.k)
    out = np.zeros((c.shape[0], 2 * n + 1, V.k), dtype=np.int64)
    out[:, 0, 0] = 1
    for step in range(n):
        top = 2 * step + 1
        prev = out[:, :top].copy()
        out[:, 1:top + 1] = V.sub(out[:, 1:top + 1], V.mul(prev, c))
        out[:, 2:top + 2] = V.add(out[:, 2:top + 2], prev)
    return out


def _targets(p):
    """(i, j, y-degree) for the entries that can be nonzero."""
    return [(i, j, (i * p - j) // 2) for i in (1, 2, 3) for j in (1, 2, 3) if (i * p - j) % 2 == 0]


def hasse_witt_pairs(ctx, a_arr, b_arr):
    """Hasse-Witt matrices of the standard models for arrays of (a, b); shape (N, 3, 3, k)."""
    V = ctx.vec
    p = ctx.p
    Pa, Pb = half_powers(V, a_arr), half_powers(V, b_arr)
    L = Pa.shape[1]
    out = np.zeros((a_arr.shape[0], 3, 3, V.k), dtype=np.int64)
    for i, j, d in _targets(p):
        lo, hi = max(0, d - L + 1), min(d, L - 1)
        m = np.arange(lo, hi + 1)
        terms = V.mul(Pa[:, m], Pb[:, d - m])
        out[:, i - 1, j - 1] = terms.sum(axis=1) % p
    return out


def superspecial_grid(p: int) -> np.ndarray:
    """Boolean (q, q) table over encoded (a, b) in F_{p^2}: Hasse-Witt matrix is zero.

    Singular pairs are not filtered here.
    """
    ctx = make_ctx(p, 2)
    V = ctx.vec
    P = half_powers(V, V.elements())
    L = P.shape[1]
    zero = np.ones((ctx.q, ctx.q), dtype=bool)
    for _, _, d in _targets(p):
        lo, hi = max(0, d - L + 1), min(d, L - 1)
        m = np.arange(lo, hi + 1)
        C = V.matmul(P[:, m], P[:, d - m])
        zero &= V.is_zero(C)
    return zero


# --- independent grids for exhaustive scans -----------------------------------

def _linear_powers(V, c, n):
    """Coefficients of (v - c)^n in v, shape (len(c), n + 1, k)."""
    out = np.zeros((c.shape[0], n + 1, V.k), dtype=np.int64)
    out[:, 0, 0] = 1
    c = c[:, None]
    for step in range(n):
        # (v - c)^(s+1) = v (v - c)^s - c (v - c)^s
        prev = out[:, :step + 1].copy()
        out[:, 1:step + 2] = prev
        out[:, 0] = 0
        out[:, :step + 1] = V.sub(out[:, :step + 1], V.mul(prev, c))
    return out


def quartic_hasse_grids(p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(q, q) boolean grids: the Hasse invariant of each elliptic quotient vanishes.

    The three quartics are (u^2 - a - 2)(u^2 - b - 2), (u^2 - a + 2)(u^2 - b + 2)
    and (u^2 - a u + 1)(u^2 - b u + 1); the invariant is the coefficient of
    u^(p-1) in g^((p-1)/2).  Singular pairs are not filtered.
    """
    ctx = make_ctx(p, 2)
    V = ctx.vec
    n = (p - 1) // 2
    xs = V.elements()
    grids = []
    for shift in (2, -2):
        # coefficient of v^n in (v - A)^n (v - B)^n with v = u^2
        P = _linear_powers(V, V.add(xs, V.const(shift)), n)
        grids.append(V.is_zero(V.matmul(P, P[:, ::-1])))
    P = half_powers(V, xs)
    grids.append(V.is_zero(V.matmul(P, P[:, ::-1])))
    return tuple(grids)


def legendre_hasse_grid(p: int) -> np.ndarray:
    """(q, q) boolean grid: H_p vanishes at all three Legendre parameters.

    Each parameter is a ratio (S + 2R)/(S - 2R) with R^2 = T for elements S, T
    of F_{p^2} built from a +- 2 and b +- 2, so everything happens in F_{p^4}.
    Singular pairs come back False.
    """
    if p > 31:
        raise HoweError("legendre_hasse_grid is limited to p <= 31")
    ctx2, ctx4 = make_ctx(p, 2), make_ctx(p, 4)
    V = ctx4.vec
    emb = V.asarray([embed(x, ctx4) for x in ctx2.elements()])
    q2 = ctx2.q
    ia, ib = np.meshgrid(np.arange(q2), np.arange(q2), indexing="ij")
    a, b = emb[ia.ravel()], emb[ib.ravel()]
    two = V.const(2)
    ap, am, bp, bm = V.add(a, two), V.sub(a, two), V.add(b, two), V.sub(b, two)
    elems = V.elements()
    root_of = np.zeros(V.q, dtype=np.int64)
    root_of[V.encode(V.mul(elems, elems))] = np.arange(V.q)
    H = V.asarray([ctx4(c) for c in hasse_poly(p).coeffs])
    ok = np.ones(q2 * q2, dtype=bool)
    valid = ~V.is_zero(V.sub(a, b))
    for S, T in ((V.add(ap, bp), V.mul(ap, bp)),
                 (V.add(am, bm), V.mul(am, bm)),
                 (V.add(V.mul(ap, bm), V.mul(am, bp)), V.mul(V.mul(ap, bm), V.mul(am, bp)))):
        R = V.decode(root_of[V.encode(T)])
        twoR = V.add(R, R)
        num, den = V.add(S, twoR), V.sub(S, twoR)
        valid &= ~V.is_zero(num) & ~V.is_zero(den)
        lam = V.mul(num, V.inv(den))
        ok &= V.is_zero(V.poly_eval(H, lam))
    for c in (two, V.const(-2)):
        valid &= ~V.is_zero(V.sub(a, c)) & ~V.is_zero(V.sub(b, c))
    return (ok & valid).reshape(q2, q2)
