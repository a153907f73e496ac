"""Geometric isomorphism classes of standard-form curves.

Two hyperelliptic curves are isomorphic over the algebraic closure exactly
when some fractional-linear map carries one branch locus onto the other.
A map is pinned down by where it sends three points, so for each ordered
triple T = (r1, r2, r3) of roots we use

    phi_T(x) = (x - r1)(r2 - r3) / ((x - r3)(r2 - r1)),

which sends T to (0, 1, oo), and record the sorted images of the other five
roots.  The minimum of these 336 sets is a complete invariant of the locus
(the *signature*), and the number of triples attaining it is the number of
fractional-linear self-maps of the locus (the reduced automorphism order).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import poly
from .errors import HoweError, InvariantViolation
from .field_tower import FieldCtx, FieldElem, embed, make_ctx, to_common
from .standard_form import CurveAB, legendre_triple_of, sqrt_choices

TRIPLES = np.array(list(itertools.permutations(range(8), 3)), dtype=np.int64)
OTHERS = np.array([[i for i in range(8) if i not in t] for t in TRIPLES], dtype=np.int64)


class AutGroup(str, Enum):
    C2xC2xC2 = "C2xC2xC2"
    C2xD8 = "C2xD8"
    V8 = "V8"
    C2xS4 = "C2xS4"


LABEL_ORDER = (AutGroup.C2xC2xC2, AutGroup.C2xD8, AutGroup.V8, AutGroup.C2xS4)
EXPECTED_ORDERS = {4: AutGroup.C2xC2xC2, 8: AutGroup.C2xD8, 16: AutGroup.V8, 24: AutGroup.C2xS4}


@dataclass(frozen=True)
class AutLabel:
    label: AutGroup
    reduced_order: int

    def __str__(self):
        return self.label.value


@dataclass(frozen=True)
class BranchLocus:
    """The eight roots of the octic, in the smallest tower field holding them."""
    roots: tuple[FieldElem, ...]
    source: CurveAB | None = None

    def __post_init__(self):
        if len(self.roots) != 8 or len(set(self.roots)) != 8:
            raise HoweError("a branch locus needs exactly 8 distinct roots")

    @property
    def ctx(self) -> FieldCtx:
        return self.roots[0].ctx

    def lifted(self, ctx: FieldCtx) -> BranchLocus:
        return BranchLocus(tuple(sorted(embed(r, ctx) for r in self.roots)), self.source)


def _roots_from_sqrt(ap, am):
    """Roots of x^4 - a x^2 + 1 given alpha_+^2 = a + 2 and alpha_-^2 = a - 2."""
    return [(s * ap + t * am) / 2 for s in (1, -1) for t in (1, -1)]


def branch_locus(c: CurveAB) -> BranchLocus:
    c.require_nonsingular()
    ap, am, bp, bm = sqrt_choices(c).as_tuple()
    roots = _roots_from_sqrt(ap, am) + _roots_from_sqrt(bp, bm)
    return BranchLocus(tuple(sorted(roots)), c)


def locus_of_octic(f: list[FieldElem]) -> BranchLocus:
    """Branch locus of y^2 = f for any squarefree degree-8 f, found by root finding up the tower."""
    f = poly.trim(f)
    if len(f) != 9 or not poly.is_squarefree(f):
        raise HoweError("expected a squarefree degree-8 polynomial")
    ctx = f[0].ctx
    for k in (2, 4, 8):
        if k < ctx.k:
            continue
        big = make_ctx(ctx.p, k)
        rts = poly.roots([embed(x, big) for x in f], big)
        if len(rts) == 8:
            return BranchLocus(tuple(rts))
    raise HoweError("octic does not split in F_{p^8}")


# --- vectorized core ------------------------------------------------------------

def normalized_sets(V, R, triples=TRIPLES, others=OTHERS):
    """Sorted encoded images of the 5 remaining roots, per triple.

    R has shape (..., 8, k); the result has shape (..., len(triples), 5).
    """
    r1 = R[..., triples[:, 0], :][..., None, :]
    r2 = R[..., triples[:, 1], :][..., None, :]
    r3 = R[..., triples[:, 2], :][..., None, :]
    X = R[..., others, :]
    num = V.mul(V.sub(X, r1), V.sub(r2, r3))
    den = V.mul(V.sub(X, r3), V.sub(r2, r1))
    vals = V.encode(V.mul(num, V.inv(den)))
    return np.sort(vals, axis=-1)


def _min_row(sets):
    order = np.lexsort(sets.T[::-1])
    best = sets[order[0]]
    return best, int((sets == best).all(axis=1).sum())


@dataclass(frozen=True)
class Signature:
    k: int
    values: tuple[int, ...]
    reduced_order: int


def signatures(V, R) -> list[Signature]:
    """Signatures for a stack of loci R (n, 8, k) over the field of ``V``."""
    out = []
    chunk = max(1, 4096 // len(TRIPLES) * 8)
    for start in range(0, R.shape[0], chunk):
        sets = normalized_sets(V, R[start:start + chunk])
        for s in sets:
            best, count = _min_row(s)
            out.append(Signature(V.k, tuple(int(v) for v in best), count))
    return out


def locus_array(L: BranchLocus, ctx: FieldCtx | None = None) -> np.ndarray:
    ctx = ctx or L.ctx
    return ctx.vec.asarray([embed(r, ctx) for r in L.roots])


def signature(L: BranchLocus) -> Signature:
    return signatures(L.ctx.vec, locus_array(L)[None])[0]


def _common(L1: BranchLocus, L2: BranchLocus) -> FieldCtx:
    if L1.ctx.p != L2.ctx.p:
        raise HoweError("loci over different characteristics")
    return make_ctx(L1.ctx.p, max(L1.ctx.k, L2.ctx.k))


def are_isomorphic(L1: BranchLocus, L2: BranchLocus) -> bool:
    """Fix the first ordered triple of L1 and try all 336 ordered triples of L2."""
    ctx = _common(L1, L2)
    V = ctx.vec
    A, B = locus_array(L1, ctx), locus_array(L2, ctx)
    target = normalized_sets(V, A, TRIPLES[:1], OTHERS[:1])[0]
    return bool((normalized_sets(V, B) == target).all(axis=1).any())


def reduced_aut_order(L: BranchLocus) -> int:
    return signature(L).reduced_order


def mobius_images(L: BranchLocus, src: tuple[int, int, int], dst: tuple[FieldElem, FieldElem, FieldElem]):
    """Images of the locus under the map sending roots at positions ``src`` to ``dst``.

    Used to exhibit explicit maps; points sent to infinity come back as None.
    """
    r = L.roots
    r1, r2, r3 = (r[i] for i in src)
    s1, s2, s3 = to_common(*dst, r1)[:3]

    def phi(x, a, b, c):
        if x == c:
            return None
        return (x - a) * (b - c) / ((x - c) * (b - a))

    def phi_inv(y, a, b, c):
        # solve (x - a)(b - c) = y (x - c)(b - a)
        if y is None:
            return c
        u, v = b - c, y * (b - a)
        if u == v:
            return None
        return (a * u - c * v) / (u - v)

    return [phi_inv(phi(x, r1, r2, r3), s1, s2, s3) for x in r]


# --- labels -------------------------------------------------------------------

def label_for_order(order: int) -> AutGroup:
    try:
        return EXPECTED_ORDERS[order]
    except KeyError:
        raise InvariantViolation(f"reduced automorphism order {order} is outside {{4, 8, 16, 24}}") from None


def aut_label(L: BranchLocus) -> AutLabel:
    if L.ctx.p <= 7:
        raise HoweError("automorphism labels are only defined for p > 7")
    calibrate(L.ctx.p)
    order = reduced_aut_order(L)
    return AutLabel(label_for_order(order), order)


def octic_from_roots(roots):
    f = [roots[0].ctx.one]
    for r in roots:
        f = poly.mul(f, [-r, r.ctx.one])
    return f


def model_x8_minus_1(p: int) -> BranchLocus:
    ctx = make_ctx(p, 2)
    return locus_of_octic(poly.from_ints(ctx, [-1, 0, 0, 0, 0, 0, 0, 0, 1]))


def model_s4(p: int, sign: int = -1) -> BranchLocus:
    """y^2 = x^8 + 14 sign x^4 + 1."""
    ctx = make_ctx(p, 2)
    return locus_of_octic(poly.from_ints(ctx, [1, 0, 0, 0, 14 * sign, 0, 0, 0, 1]))


def model_d8(p: int) -> tuple[FieldElem, BranchLocus]:
    """A y^2 = x^8 - c x^4 + 1 model with all roots in F_{p^2} and reduced order 8.

    Uses c = w + 1/w with w = u^4, so the roots are i^j u and i^j / u.
    """
    ctx = make_ctx(p, 2)
    excluded = {ctx(0), ctx(2), ctx(-2), ctx(14), ctx(-14)}
    for idx in range(2, ctx.q):
        u = ctx.from_index(idx)
        w = u ** 4
        if w == 1 or w == -1:
            continue
        c = w + 1 / w
        if c in excluded:
            continue
        z = ctx.zero
        L = locus_of_octic([ctx.one, z, z, z, -c, z, z, z, ctx.one])
        if reduced_aut_order(L) == 8:
            return c, L
    raise InvariantViolation(f"no x^8 - c x^4 + 1 model of reduced order 8 at p = {p}")


_CALIBRATED: dict[int, dict[str, int]] = {}


def calibrate(p: int) -> dict[str, int]:
    """Measure reduced orders of the canonical models and check them against the label map."""
    if p in _CALIBRATED:
        return _CALIBRATED[p]
    measured = {
        "x^8-cx^4+1": reduced_aut_order(model_d8(p)[1]),
        "x^8-1": reduced_aut_order(model_x8_minus_1(p)),
        "x^8-14x^4+1": reduced_aut_order(model_s4(p, -1)),
        "x^8+14x^4+1": reduced_aut_order(model_s4(p, 1)),
    }
    expected = {"x^8-cx^4+1": AutGroup.C2xD8, "x^8-1": AutGroup.V8,
                "x^8-14x^4+1": AutGroup.C2xS4, "x^8+14x^4+1": AutGroup.C2xS4}
    for name, order in measured.items():
        if EXPECTED_ORDERS.get(order) != expected[name]:
            raise InvariantViolation(f"calibration failed at p = {p}: {name} has reduced order {order}")
    _CALIBRATED[p] = measured
    return measured


# --- j-invariants --------------------------------------------------------------

def j_invariant(lam: FieldElem) -> FieldElem:
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


def j_multiset(c: CurveAB) -> tuple[FieldElem, ...]:
    """Sorted j-invariants of the three elliptic quotients of the standard model."""
    return tuple(sorted(j_invariant(l) for l in legendre_triple_of(c).lambdas))


def j_prefilter_distinct(c1: CurveAB, c2: CurveAB) -> bool:
    """True when the quotient j-invariants prove c1 and c2 non-isomorphic.

    The three quotients of the standard model are only canonical when the
    reduced automorphism group has order 4; larger groups carry further
    involutions whose quotient triples differ.  So the filter only speaks
    when both curves have reduced order 4, and otherwise returns False.
    """
    if j_multiset(c1) == j_multiset(c2):
        return False
    return reduced_aut_order(branch_locus(c1)) == 4 and reduced_aut_order(branch_locus(c2)) == 4
