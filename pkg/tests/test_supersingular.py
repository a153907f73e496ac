import numpy as np
import pytest

from howe3 import poly
from howe3.errors import DegenerateError, HoweError, SingularCurveError
from howe3.field_tower import is_fourth_power, make_ctx, primes_between
from howe3.standard_form import standard_octic
from howe3.supersingular import (hasse_invariant_quartic, hasse_poly, hasse_witt, hasse_witt_pairs,
                                 is_superspecial, is_supersingular_legendre, superspecial_grid,
                                 supersingular_lambdas)


def test_hasse_poly_small_cases():
    assert hasse_poly(3).coeffs == (1, 1)
    assert hasse_poly(7).coeffs == (1, 2, 2, 1)
    assert hasse_poly(5).coeffs == (1, 4, 1)


@pytest.mark.parametrize("p", primes_between(3, 99))
def test_hasse_poly_shape(p):
    H = hasse_poly(p)
    assert H.degree == (p - 1) // 2
    assert H.coeffs == H.coeffs[::-1]
    assert H(make_ctx(p, 2).zero) == 1


def test_legendre_supersingularity():
    assert is_supersingular_legendre(make_ctx(7, 2)(-1))
    assert not is_supersingular_legendre(make_ctx(5, 2)(-1))
    assert is_supersingular_legendre(make_ctx(3, 2)(2))
    with pytest.raises(DegenerateError):
        is_supersingular_legendre(make_ctx(7, 2)(1))


def test_supersingular_lambdas_small():
    assert supersingular_lambdas(3) == [make_ctx(3, 2)(2)]
    assert make_ctx(7, 2)(6) in supersingular_lambdas(7)


@pytest.mark.parametrize("p", primes_between(5, 99))
def test_supersingular_set_is_legendre_stable(p):
    lams = set(supersingular_lambdas(p))
    assert len(lams) == (p - 1) // 2
    assert all(is_fourth_power(x) for x in lams)
    assert {1 / x for x in lams} == lams
    assert {1 - x for x in lams} == lams


def test_quartic_hasse_invariant():
    g7 = poly.from_ints(make_ctx(7, 2), [-1, 0, 0, 0, 1])
    g5 = poly.from_ints(make_ctx(5, 2), [-1, 0, 0, 0, 1])
    assert not hasse_invariant_quartic(g7)
    assert hasse_invariant_quartic(g5)
    with pytest.raises(HoweError):
        hasse_invariant_quartic(g7[:4])
    with pytest.raises(SingularCurveError):
        hasse_invariant_quartic(poly.from_ints(make_ctx(7, 2), [1, 0, 2, 0, 1]))  # (x^2 + 1)^2


def test_hasse_witt_x8_minus_1():
    for p, zero in ((7, True), (17, False), (23, True)):
        f = poly.from_ints(make_ctx(p, 2), [-1, 0, 0, 0, 0, 0, 0, 0, 1])
        assert hasse_witt(f).is_zero == zero


def test_hasse_witt_matches_schoolbook():
    ctx = make_ctx(11, 2)
    f = standard_octic(ctx.from_index(17), ctx.from_index(40))
    power = [ctx.one]
    for _ in range(5):
        power = poly.mul(power, f)
    M = hasse_witt(f)
    for i in range(3):
        for j in range(3):
            d = (i + 1) * 11 - (j + 1)
            assert M.entries[i][j] == (power[d] if d < len(power) else ctx.zero)


def test_is_superspecial_examples():
    ctx = make_ctx(7, 2)
    assert is_superspecial(ctx(3), ctx(4))
    with pytest.raises(SingularCurveError):
        is_superspecial(ctx(3), ctx(3))


@pytest.mark.parametrize("p", [11, 13, 23])
def test_batched_matches_scalar(p):
    ctx = make_ctx(p, 2)
    V = ctx.vec
    rng = np.random.default_rng(p)
    idx = rng.integers(0, ctx.q, size=(40, 2))
    H = hasse_witt_pairs(ctx, V.decode(idx[:, 0]), V.decode(idx[:, 1]))
    grid = superspecial_grid(p)
    for n, (i, j) in enumerate(idx):
        a, b = ctx.from_index(i), ctx.from_index(j)
        f = standard_octic(a, b)
        if not poly.is_squarefree(f):
            continue
        M = hasse_witt(f)
        assert [[x for x in row] for row in M.entries] == [V.to_elems(H[n, r]) for r in range(3)]
        assert grid[i, j] == M.is_zero
