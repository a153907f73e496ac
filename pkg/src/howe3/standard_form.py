"""The standard model y^2 = (x^4 - a x^2 + 1)(x^4 - b x^2 + 1).

Covers nonsingularity, the (M, N) <-> (a, b) change of coordinates, the three
elliptic quotients, the fixed square roots of a +- 2 and b +- 2, the Legendre
parameters of the quotients, and the inverse map from a pair of square roots
of Legendre parameters back to (a, b).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly
from .errors import DegenerateError, SingularCurveError
from .field_tower import FieldElem, sqrt_all, sqrt_lift, to_common


@dataclass(frozen=True)
class CurveAB:
    a: FieldElem
    b: FieldElem

    def __post_init__(self):
        a, b = to_common(self.a, self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def ctx(self):
        return self.a.ctx

    @property
    def p(self) -> int:
        return self.a.ctx.p

    @property
    def octic(self) -> list[FieldElem]:
        """Coefficients of f(x), little-endian, length 9."""
        return standard_octic(self.a, self.b)

    @property
    def nonsingular(self) -> bool:
        return nonsingular_ab(self.a, self.b)

    def require_nonsingular(self):
        if not self.nonsingular:
            raise SingularCurveError(f"singular model: a={self.a}, b={self.b}")

    def swapped(self) -> CurveAB:
        return CurveAB(self.b, self.a)

    def to_mn(self) -> MNForm:
        return MNForm(-(self.a + self.b), self.a * self.b + 2)


@dataclass(frozen=True)
class MNForm:
    """y^2 = x^8 + M x^6 + N x^4 + M x^2 + 1."""
    M: FieldElem
    N: FieldElem

    @property
    def octic(self) -> list[FieldElem]:
        ctx = self.M.ctx
        return [ctx.one, ctx.zero, self.M, ctx.zero, self.N, ctx.zero, self.M, ctx.zero, ctx.one]


@dataclass(frozen=True)
class SqrtChoices:
    alpha_plus: FieldElem
    alpha_minus: FieldElem
    beta_plus: FieldElem
    beta_minus: FieldElem

    @property
    def ctx(self):
        return self.alpha_plus.ctx

    @property
    def degree(self) -> int:
        """Degree over F_p of the field holding the four roots."""
        return self.alpha_plus.ctx.k

    def as_tuple(self):
        return (self.alpha_plus, self.alpha_minus, self.beta_plus, self.beta_minus)


@dataclass(frozen=True)
class LegendreTriple:
    lambda1: FieldElem
    lambda2: FieldElem
    lambda3: FieldElem
    sqrt_lambda1: FieldElem
    sqrt_lambda2: FieldElem

    @property
    def lambdas(self):
        return (self.lambda1, self.lambda2, self.lambda3)


def standard_octic(a: FieldElem, b: FieldElem) -> list[FieldElem]:
    a, b = to_common(a, b)
    ctx = a.ctx
    return [ctx.one, ctx.zero, -(a + b), ctx.zero, a * b + 2, ctx.zero, -(a + b), ctx.zero, ctx.one]


def nonsingular_ab(a: FieldElem, b: FieldElem) -> bool:
    a, b = to_common(a, b)
    return a != 2 and a != -2 and b != 2 and b != -2 and a != b


def nonsingular_MN(M: FieldElem, N: FieldElem) -> bool:
    return bool(2 * M + N + 2) and bool(-2 * M + N + 2) and bool(M * M - 4 * N + 8)


def mn_to_ab(M: FieldElem, N: FieldElem) -> tuple[FieldElem, FieldElem]:
    """Roots of z^2 + M z + (N - 2), lifted if the discriminant is a non-square."""
    disc = M * M - 4 * (N - 2)
    r = sqrt_lift(disc)
    M = to_common(M, r)[0]
    a = (-M + r) / 2
    b = (-M - r) / 2
    return tuple(sorted((a, b)))


def quotient_quartics(c: CurveAB) -> tuple[list[FieldElem], list[FieldElem], list[FieldElem]]:
    """The quartics of the three elliptic quotients C/<sigma_i>.

    g1(u) = (u^2-a-2)(u^2-b-2) for u = x+1/x, g2(u) = (u^2-a+2)(u^2-b+2) for
    u = x-1/x, g3(u) = (u^2-au+1)(u^2-bu+1) for u = x^2.
    """
    c.require_nonsingular()
    a, b, ctx = c.a, c.b, c.ctx
    z, one = ctx.zero, ctx.one
    g1 = poly.mul([-(a + 2), z, one], [-(b + 2), z, one])
    g2 = poly.mul([-(a - 2), z, one], [-(b - 2), z, one])
    g3 = poly.mul([one, -a, one], [one, -b, one])
    return g1, g2, g3


def sqrt_choices(c: CurveAB) -> SqrtChoices:
    """Fixed roots of a+2, a-2, b+2, b-2 in the smallest tower field holding all four."""
    c.require_nonsingular()
    a, b = c.a, c.b
    return SqrtChoices(*sqrt_all([a + 2, a - 2, b + 2, b - 2]))


def legendre_triple(ch: SqrtChoices) -> LegendreTriple:
    ap, am, bp, bm = ch.as_tuple()
    den1, den2, den3 = ap - bp, am + bm, ap * bm + am * bp
    if not den1 or not den2 or not den3:
        raise DegenerateError("a = b: the Legendre transformation is undefined")
    s1 = (ap + bp) / den1
    s2 = (am - bm) / den2
    r3 = (ap * bm - am * bp) / den3
    return LegendreTriple(s1 * s1, s2 * s2, r3 * r3, s1, s2)


def legendre_triple_of(c: CurveAB) -> LegendreTriple:
    return legendre_triple(sqrt_choices(c))


def gammas(ch: SqrtChoices) -> tuple[FieldElem, FieldElem, FieldElem, FieldElem]:
    """Roots of g3: (a +- alpha_+ alpha_-)/2 and (b +- beta_+ beta_-)/2."""
    ap, am, bp, bm = ch.as_tuple()
    a = ap * ap - 2
    b = bp * bp - 2
    return ((a + ap * am) / 2, (a - ap * am) / 2, (b + bp * bm) / 2, (b - bp * bm) / 2)


def _inverse_denominator(s1: FieldElem, s2: FieldElem) -> FieldElem:
    den = (s1 - s2) * (s1 * s2 - 1)
    if not den:
        raise DegenerateError("sqrt(l1) = sqrt(l2) or sqrt(l1 l2) = 1")
    return den


def ab_from_sqrt_lambdas(s1: FieldElem, s2: FieldElem) -> tuple[FieldElem, FieldElem]:
    """(a, b) from the chosen square roots of lambda1 and lambda2."""
    s1, s2 = to_common(s1, s2)
    for s in (s1, s2):
        if not s or s * s == 1:
            raise DegenerateError("lambda must avoid 0 and 1")
    den = _inverse_denominator(s1, s2)
    l1, l2, s12 = s1 * s1, s2 * s2, s1 * s2
    common = l1 * s2 + s1 * l2 + s1 + s2
    a = 2 * (common + 4 * s12) / den
    b = 2 * (common - 4 * s12) / den
    return a, b


def sum_difference(s1: FieldElem, s2: FieldElem) -> tuple[FieldElem, FieldElem]:
    """a + b and a - b in closed form, from the same square roots."""
    s1, s2 = to_common(s1, s2)
    den = _inverse_denominator(s1, s2)
    return 4 * (s1 + s2) * (s1 * s2 + 1) / den, 16 * s1 * s2 / den


def shifted_decomposition(s1: FieldElem, s2: FieldElem):
    """(a-2, a+2, b-2, b+2) as quotients over the common denominator."""
    s1, s2 = to_common(s1, s2)
    den = _inverse_denominator(s1, s2)
    return (
        4 * s1 * (s2 + 1) ** 2 / den,
        4 * s2 * (s1 + 1) ** 2 / den,
        4 * s1 * (s2 - 1) ** 2 / den,
        4 * s2 * (s1 - 1) ** 2 / den,
    )


def sqrt_lambda3(s1: FieldElem, s2: FieldElem) -> FieldElem:
    """The root (s1 s2 - 1)/(s1 - s2) of lambda3; only its square is canonical."""
    s1, s2 = to_common(s1, s2)
    if s1 == s2:
        raise DegenerateError("sqrt(l1) = sqrt(l2)")
    return (s1 * s2 - 1) / (s1 - s2)
