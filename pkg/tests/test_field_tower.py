import pytest
from hypothesis import given, settings, strategies as st

from howe3.errors import FieldError
from howe3.field_tower import (descend, embed, format_element, in_subfield, is_fourth_power, is_prime,
                               is_square, least_nonresidue, lift, make_ctx, parse_element, sqrt,
                               sqrt_all, sqrt_lift)

PRIMES = [3, 7, 11, 13, 97]


def elements(p, k):
    ctx = make_ctx(p, k)
    return st.integers(0, ctx.q - 1).map(ctx.from_index)


@st.composite
def field_and_elems(draw, n=3):
    p = draw(st.sampled_from(PRIMES))
    k = draw(st.sampled_from([1, 2, 4, 8]))
    ctx = make_ctx(p, k)
    xs = [ctx.from_index(draw(st.integers(0, ctx.q - 1))) for _ in range(n)]
    return ctx, xs


def test_small_prime_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert least_nonresidue(7) == 3
    assert least_nonresidue(17) == 3


def test_quadratic_modulus_is_least_nonresidue():
    ctx = make_ctx(7, 2)
    assert ctx.modulus == (4, 0, 1)  # t^2 - 3
    t = ctx.gen
    assert t * t == ctx(3)


def test_moduli_are_deterministic():
    assert make_ctx(13, 4).modulus == make_ctx(13, 4).modulus
    for p in (3, 5, 7):
        for k in (4, 8):
            m = make_ctx(p, k).modulus
            assert len(m) == k + 1 and m[-1] == 1 and m[0] != 0


def test_rejects_bad_parameters():
    with pytest.raises(FieldError):
        make_ctx(9, 2)
    with pytest.raises(FieldError):
        make_ctx(2, 2)
    with pytest.raises(FieldError):
        make_ctx(7, 3)


@settings(max_examples=60, deadline=None)
@given(field_and_elems())
def test_ring_axioms(data):
    ctx, (x, y, z) = data
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == ctx.zero
    if x:
        assert x * x.inv() == ctx.one
        assert x ** -2 * x ** 2 == ctx.one


@settings(max_examples=60, deadline=None)
@given(field_and_elems(n=1))
def test_sqrt_is_canonical_root(data):
    ctx, (x,) = data
    r = sqrt(x)
    if is_square(x):
        assert r * r == x
        assert r.index() <= (-r).index()
    else:
        assert r is None
        s = sqrt_lift(x) if ctx.k < 8 else None
        if s is not None:
            assert s * s == lift(x, 2 * ctx.k)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(PRIMES), st.data())
def test_embedding_is_ring_homomorphism(p, data):
    for k_small, k_big in ((1, 2), (2, 4), (4, 8), (2, 8)):
        x = data.draw(elements(p, k_small))
        y = data.draw(elements(p, k_small))
        big = make_ctx(p, k_big)
        assert embed(x * y, big) == embed(x, big) * embed(y, big)
        assert embed(x + y, big) == embed(x, big) + embed(y, big)
        assert descend(embed(x, big), k_small) == x
        assert in_subfield(embed(x, big), k_small)


def test_descend_rejects_outsiders():
    ctx = make_ctx(7, 4)
    outsider = next(x for x in ctx.elements() if not in_subfield(x, 2))
    assert descend(outsider, 2) is None


def test_fourth_powers():
    ctx = make_ctx(13, 2)
    fourth = {x ** 4 for x in ctx.elements() if x}
    assert all(is_fourth_power(x) == (x in fourth) for x in ctx.elements() if x)


def test_sqrt_all_lifts_together():
    ctx = make_ctx(7, 2)
    nonsq = ctx.nonresidue
    roots = sqrt_all([ctx(2), nonsq])
    assert roots[0].ctx.k == 4
    assert roots[1] * roots[1] == lift(nonsq, 4)


@settings(max_examples=60, deadline=None)
@given(field_and_elems(n=1))
def test_text_round_trip(data):
    ctx, (x,) = data
    assert parse_element(format_element(x), ctx) == x


def test_parse_variants():
    ctx = make_ctx(11, 4)
    assert parse_element("3+2*t^2", ctx) == ctx((3, 0, 2, 0))
    assert parse_element("t^3 - 1", ctx) == ctx((10, 0, 0, 1))
    assert parse_element("-14", ctx) == ctx(-14)
    assert ctx("2t") == ctx((0, 2))
    for bad in ("", "t^9", "3 4", "x+1", "1++t"):
        with pytest.raises(FieldError):
            parse_element(bad, ctx)


def test_to_json_metadata():
    meta = make_ctx(23, 2).to_json()
    assert meta == {"p": 23, "k": 2, "modulus": [18, 0, 1]}
