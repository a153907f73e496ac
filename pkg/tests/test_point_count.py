import pytest

from howe3 import poly
from howe3.errors import HasseWeilViolation, HoweError, SingularCurveError, TooLargeError
from howe3.field_tower import is_square, make_ctx
from howe3.point_count import (TwistSpec, Verdict, count_elliptic_quartic, count_hyperelliptic, count_legendre,
                               hasse_weil_check, predicted_verdict, twist_predicate, twist_verdict,
                               verdict_for, verify_superspecial_count)
from howe3.standard_form import CurveAB
from howe3.enumeration import enumerate_structured


def test_known_superspecial_counts():
    for p, expected in ((23, 23 * 23 + 1 + 6 * 23), (17, 17 * 17 + 1 - 6 * 17)):
        rec = enumerate_structured(p, labels=False)[0]
        c = CurveAB(*rec.representative)
        r = count_hyperelliptic(c.octic, 1, c.ctx)
        assert r.N == expected
        assert r.verdict == predicted_verdict(p)
    assert 23 * 23 + 1 + 6 * 23 == 668 and 17 * 17 + 1 - 6 * 17 == 188


def test_legendre_counts():
    r7 = count_legendre(make_ctx(7, 2)(-1), make_ctx(7, 2))
    assert (r7.N, r7.verdict) == (64, Verdict.MAXIMAL)
    r5 = count_legendre(make_ctx(5, 2)(-1), make_ctx(5, 2))
    assert r5.N == 32 and r5.verdict == Verdict.NEITHER  # trace -2 over F_5, so 26 + 6


def test_hasse_weil_and_verdicts():
    hasse_weil_check(50, 49, 3, 7)
    with pytest.raises(HasseWeilViolation):
        hasse_weil_check(50 + 43, 49, 3, 7)
    hasse_weil_check(8, 7, 1)  # odd-degree field: floor bound
    assert verdict_for(92, 49, 3, 7) == Verdict.MAXIMAL
    assert verdict_for(8, 49, 3, 7) == Verdict.MINIMAL
    assert verdict_for(50, 49, 3, 7) == Verdict.NEITHER


def test_count_guards():
    ctx = make_ctx(7, 2)
    with pytest.raises(HoweError):
        count_hyperelliptic(poly.from_ints(ctx, [1, 0, 1]), 1, ctx)
    with pytest.raises(SingularCurveError):
        count_elliptic_quartic(poly.from_ints(ctx, [1, 0, 2, 0, 1]), ctx)
    big = make_ctx(37, 4)
    with pytest.raises(TooLargeError):
        count_elliptic_quartic(poly.from_ints(big, [-1, 0, 0, 0, 1]), big)
    with pytest.raises(HoweError):
        TwistSpec(ctx.zero, 1)


def test_twist_parity_p7():
    ctx = make_ctx(7, 2)
    c = CurveAB(ctx(3), ctx(4))
    sq, nonsq = ctx(2), ctx.nonresidue
    assert is_square(sq) and not is_square(nonsq)
    r1 = twist_verdict(c, TwistSpec(sq, 1))
    r2 = twist_verdict(c, TwistSpec(nonsq, 1))
    assert r1.count.N + r2.count.N == 2 * (ctx.q + 1)
    assert r1.agrees and r2.agrees
    assert r1.count.verdict == Verdict.MAXIMAL and r2.count.verdict == Verdict.MINIMAL


def test_twist_predicate_table():
    assert twist_predicate(7, 1, True) == Verdict.MAXIMAL
    assert twist_predicate(13, 1, True) == Verdict.MINIMAL
    assert twist_predicate(13, 1, False) == Verdict.MAXIMAL
    for p in (7, 13):
        assert twist_predicate(p, 2, True) == Verdict.MINIMAL
        assert twist_predicate(p, 2, False) == Verdict.MAXIMAL


def test_twist_guards():
    ctx = make_ctx(7, 2)
    c = CurveAB(ctx(3), ctx(4))
    with pytest.raises(TooLargeError):
        twist_verdict(c, TwistSpec(ctx.one, 4))
    generic = CurveAB(ctx(3), ctx(5))
    with pytest.raises(HoweError):
        twist_verdict(generic, TwistSpec(ctx.one, 1))


def test_report_for_generic_curve():
    ctx = make_ctx(11, 2)
    rep = verify_superspecial_count(CurveAB(ctx(3), ctx(5)))
    assert not rep.applicable and not rep.agrees
    assert "not superspecial" in rep.to_json()["reason"]


def test_report_descends_from_extension():
    ctx = make_ctx(7, 2)
    big = make_ctx(7, 4)
    from howe3.field_tower import embed
    rep = verify_superspecial_count(CurveAB(embed(ctx(3), big), embed(ctx(4), big)))
    assert rep.applicable and rep.agrees
    assert all(v == Verdict.MAXIMAL for v in rep.quotient_verdicts)
