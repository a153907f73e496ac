import random

import pytest
from hypothesis import given, settings, strategies as st

from howe3 import poly
from howe3.errors import DegenerateError, SingularCurveError
from howe3.field_tower import is_square, make_ctx, to_common
from howe3.standard_form import (CurveAB, MNForm, ab_from_sqrt_lambdas, gammas, legendre_triple,
                                 legendre_triple_of, shifted_decomposition, mn_to_ab, nonsingular_ab,
                                 nonsingular_MN, quotient_quartics, sqrt_choices, sqrt_lambda3,
                                 standard_octic, sum_difference)
from howe3.enumeration import enumerate_structured


@st.composite
def curves(draw, primes=(11, 13, 17, 97)):
    p = draw(st.sampled_from(primes))
    ctx = make_ctx(p, 2)
    a = ctx.from_index(draw(st.integers(0, ctx.q - 1)))
    b = ctx.from_index(draw(st.integers(0, ctx.q - 1)))
    return CurveAB(a, b)


def test_nonsingularity_examples():
    ctx = make_ctx(11, 2)
    assert not nonsingular_ab(ctx(2), ctx(5))
    assert not nonsingular_ab(ctx(5), ctx(5))
    assert not nonsingular_ab(ctx(-2), ctx(5))
    assert nonsingular_ab(ctx(3), ctx(5))


@settings(max_examples=100, deadline=None)
@given(curves())
def test_mn_correspondence(c):
    mn = c.to_mn()
    assert nonsingular_ab(c.a, c.b) == nonsingular_MN(mn.M, mn.N)
    assert c.octic == mn.octic
    a, b = mn_to_ab(mn.M, mn.N)
    # the discriminant is (a - b)^2, so no lift is needed
    assert a.ctx.k == 2
    assert sorted((a, b)) == sorted((c.a, c.b))


def test_mn_to_ab_lifts_when_needed():
    ctx = make_ctx(7, 2)
    M = ctx.zero
    N = 2 - ctx.nonresidue  # a^2 = nonresidue
    a, b = mn_to_ab(M, N)
    assert a.ctx.k == 4 and a + b == 0


def test_octic_shape():
    ctx = make_ctx(13, 2)
    f = standard_octic(ctx(3), ctx(5))
    assert len(f) == 9 and f == f[::-1]
    assert all(not f[i] for i in range(1, 9, 2))


@settings(max_examples=50, deadline=None)
@given(curves())
def test_quotient_substitutions(c):
    if not c.nonsingular:
        return
    g1, g2, g3 = quotient_quartics(c)
    ctx = c.ctx
    x = [ctx.zero, ctx.one]

    def compose(g, inner):
        out = []
        for coef in reversed(g):
            out = poly.add(poly.mul(out, inner), [coef])
        return out

    # x^4 g1(x + 1/x) and x^4 g2(x - 1/x), computed as polynomials after clearing x^2
    xsq_plus_1 = [ctx.one, ctx.zero, ctx.one]
    xsq_minus_1 = [-ctx.one, ctx.zero, ctx.one]
    for g, num in ((g1, xsq_plus_1), (g2, xsq_minus_1)):
        # g(u) = prod (u^2 - c); x^2 (u^2 - c) = num^2 - c x^2
        acc = [ctx.one]
        for c_ in (c.a, c.b):
            shift = c_ + 2 if g is g1 else c_ - 2
            acc = poly.mul(acc, poly.sub(poly.mul(num, num), poly.scale(poly.mul(x, x), shift)))
        assert acc == c.octic
    assert compose(g3, poly.mul(x, x)) == c.octic
    assert g3[0] == 1 and g3 == g3[::-1]
    assert all(poly.is_squarefree(g) for g in (g1, g2, g3))


@settings(max_examples=100, deadline=None)
@given(curves())
def test_round_trip_and_identities(c):
    if not c.nonsingular:
        with pytest.raises(SingularCurveError):
            sqrt_choices(c)
        return
    ch = sqrt_choices(c)
    ap, am, bp, bm = ch.as_tuple()
    a, b = to_common(c.a, c.b, ap)[:2]
    assert ap * ap - am * am == 4
    assert (ap * ap, am * am, bp * bp, bm * bm) == (a + 2, a - 2, b + 2, b - 2)
    lt = legendre_triple(ch)
    s1, s2 = lt.sqrt_lambda1, lt.sqrt_lambda2
    assert s1 != s2 and s1 * s2 != 1
    assert all(x != 0 and x != 1 for x in lt.lambdas)
    assert ab_from_sqrt_lambdas(s1, s2) == (a, b)
    assert sum_difference(s1, s2) == (a + b, a - b)
    am2, ap2, bm2, bp2 = shifted_decomposition(s1, s2)
    assert (am2, ap2, bm2, bp2) == (a - 2, a + 2, b - 2, b + 2)
    assert ap2 - am2 == 4 and am2 * ap2 == a * a - 4
    assert sqrt_lambda3(s1, s2) ** 2 == lt.lambda3
    # negating both roots swaps a and b; swapping the roots negates both
    assert ab_from_sqrt_lambdas(-s1, -s2) == (b, a)
    assert ab_from_sqrt_lambdas(s2, s1) == (-a, -b)
    den = (ap - bp) * (am + bm)
    assert s1 - s2 == 2 * (am * bp + ap * bm) / den
    assert s1 * s2 - 1 == 2 * (am * bp - ap * bm) / den
    g1, g2, g3, g4 = gammas(ch)
    assert g1 * g2 == 1 and g3 * g4 == 1
    assert g1 * g3 + g2 * g4 == (a * b + ap * am * bp * bm) / 2


def test_legendre_triple_field_degree():
    ctx = make_ctx(7, 2)
    lt = legendre_triple_of(CurveAB(ctx(3), ctx(4)))
    assert lt.lambda1.ctx.k == 2


def test_degenerate_inputs():
    ctx = make_ctx(11, 2)
    with pytest.raises(DegenerateError):
        ab_from_sqrt_lambdas(ctx(3), ctx(3))
    with pytest.raises(DegenerateError):
        ab_from_sqrt_lambdas(ctx(3), ctx(3).inv())
    with pytest.raises(DegenerateError):
        ab_from_sqrt_lambdas(ctx(1), ctx(3))


def test_superspecial_roots_live_in_fp2():
    for p in (17, 23, 31):
        for rec in enumerate_structured(p, labels=False):
            ch = sqrt_choices(CurveAB(*rec.representative))
            assert ch.degree == 2
            lt = legendre_triple(ch)
            vals = shifted_decomposition(lt.sqrt_lambda1, lt.sqrt_lambda2)
            assert all(is_square(v) for v in vals)


def test_sampled_p11_lambda3_root():
    """Closed-form lambda3 root on every nonsingular pair at p = 11."""
    ctx = make_ctx(11, 2)
    rng = random.Random(0)
    elems = list(ctx.elements())
    pairs = [(a, b) for a in elems for b in elems if nonsingular_ab(a, b)]
    for a, b in rng.sample(pairs, 800):
        lt = legendre_triple_of(CurveAB(a, b))
        s1, s2 = lt.sqrt_lambda1, lt.sqrt_lambda2
        assert sqrt_lambda3(s1, s2) ** 2 == lt.lambda3
