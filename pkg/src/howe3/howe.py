"""Howe curves as fiber products of two Legendre curves.

E1: y^2 = x(x-1)(x-l1) and E2: y^2 = x(x-mu)(x-mu*l2) are glued over their
common branch points {0, oo}.  This module covers the genus of the fiber
product, the Legendre parameter l3 of the third quotient E3, the quadratic
recovering mu from (l1, l2, l3), and the two equivalent hyperellipticity tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateError, HoweError
from .field_tower import FieldElem, descend, in_subfield, sqrt, sqrt_all, sqrt_lift, to_common
from .supersingular import hasse_poly


def _check_legendre(*lams: FieldElem) -> None:
    for lam in lams:
        if not lam or lam == 1:
            raise DegenerateError(f"Legendre parameter {lam} must avoid 0 and 1")


@dataclass(frozen=True)
class HoweInput:
    lambda1: FieldElem
    lambda2: FieldElem
    mu: FieldElem

    def __post_init__(self):
        l1, l2, mu = to_common(self.lambda1, self.lambda2, self.mu)
        _check_legendre(l1, l2, mu)
        object.__setattr__(self, "lambda1", l1)
        object.__setattr__(self, "lambda2", l2)
        object.__setattr__(self, "mu", mu)

    @property
    def ctx(self):
        return self.mu.ctx


@dataclass(frozen=True)
class GenusClass:
    overlap: int

    @property
    def genus(self) -> int:
        return 5 - self.overlap

    @property
    def irreducible(self) -> bool:
        return self.overlap <= 3

    def to_json(self) -> dict:
        return {"overlap": self.overlap, "genus": self.genus if self.irreducible else None,
                "irreducible": self.irreducible}


@dataclass(frozen=True)
class GenusDegenerate:
    """Returned instead of l3 when the configuration is not of genus 3."""
    genus_class: GenusClass


def classify_genus(h: HoweInput) -> GenusClass:
    # 0 and oo are always shared; compare the remaining two points of each set
    finite1 = {h.lambda1.ctx.one, h.lambda1}
    finite2 = {h.mu, h.mu * h.lambda2}
    return GenusClass(2 + len(finite1 & finite2))


def is_genus3(h: HoweInput) -> bool:
    return classify_genus(h).overlap == 2


def lambda3(h: HoweInput) -> FieldElem:
    """Legendre parameter of E3: (mu l2 - 1)(mu - l1) / ((mu l2 - l1)(mu - 1))."""
    l1, l2, mu = h.lambda1, h.lambda2, h.mu
    den = (mu * l2 - l1) * (mu - 1)
    if not den:
        raise DegenerateError("mu*l2 = l1: the E3 Legendre form is undefined")
    return (mu * l2 - 1) * (mu - l1) / den


def try_lambda3(h: HoweInput) -> FieldElem | GenusDegenerate:
    g = classify_genus(h)
    if g.overlap != 2:
        return GenusDegenerate(g)
    return lambda3(h)


def discriminant(l1: FieldElem, l2: FieldElem, l3: FieldElem) -> FieldElem:
    l1, l2, l3 = to_common(l1, l2, l3)
    mid = l1 * l2 - l2 * l3 - l3 * l1 + 1
    return mid * mid - 4 * l1 * l2 * (1 - l3) ** 2


@dataclass(frozen=True)
class MuQuadratic:
    coeffs: tuple[FieldElem, FieldElem, FieldElem]  # (c2, c1, c0) of c2 mu^2 + c1 mu + c0
    D: FieldElem
    roots: tuple[FieldElem, ...]
    rational: bool  # roots lie in the field of the inputs

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs], "D": str(self.D),
                "roots": [str(r) for r in self.roots], "rational": self.rational,
                "roots_field": self.roots[0].ctx.to_json() if self.roots else None}


def mu_quadratic(l1: FieldElem, l2: FieldElem, l3: FieldElem) -> MuQuadratic:
    l1, l2, l3 = to_common(l1, l2, l3)
    _check_legendre(l1, l2, l3)
    mid = l1 * l2 - l2 * l3 - l3 * l1 + 1
    c2, c1, c0 = l2 * (1 - l3), -mid, l1 * (1 - l3)
    if not c2:
        raise DegenerateError("leading coefficient l2 (1 - l3) vanishes")
    D = discriminant(l1, l2, l3)
    r = sqrt(D)
    rational = r is not None
    if r is None:
        r = sqrt_lift(D)
    mid_, c2_ = to_common(mid, c2, r)[:2]
    if not r:
        roots = (mid_ / (2 * c2_),)
    else:
        roots = tuple(sorted({(mid_ + r) / (2 * c2_), (mid_ - r) / (2 * c2_)}))
    return MuQuadratic((c2, c1, c0), D, roots, rational)


def is_hyperelliptic_mu(h: HoweInput) -> bool:
    if not is_genus3(h):
        raise HoweError("hyperellipticity criterion needs a genus-3 configuration")
    return h.mu * h.mu * h.lambda2 == h.lambda1


def is_hyperelliptic_D(l1: FieldElem, l2: FieldElem, l3: FieldElem) -> bool:
    _check_legendre(*to_common(l1, l2, l3))
    return not discriminant(l1, l2, l3)


def lambda3_hyperelliptic(l1: FieldElem, l2: FieldElem) -> list[FieldElem]:
    """The one or two values of l3 for which the Howe curve is hyperelliptic.

    Values are returned in the field of the inputs when they lie there,
    otherwise in the extension that holds sqrt(l1) and sqrt(l2).
    """
    l1, l2 = to_common(l1, l2)
    _check_legendre(l1, l2)
    base_k = l1.ctx.k
    if l1 == l2:
        return [(l1 + 1) ** 2 / (4 * l1)]
    s1, s2 = sqrt_all([l1, l2])
    L1, L2 = to_common(l1, s1)[0], to_common(l2, s2)[0]
    den = (L1 - L2) ** 2
    vals = {(s1 * (L2 - 1) + sgn * s2 * (L1 - 1)) ** 2 / den for sgn in (1, -1)}
    out = []
    for v in vals:
        if v.ctx.k != base_k and in_subfield(v, base_k):
            v = descend(v, base_k)
        out.append(v)
    return sorted(out, key=lambda v: (v.ctx.k, v))


def lambda3_quadratic_coeffs(l1: FieldElem, l2: FieldElem):
    """(A, B, C) of A l3^2 + B l3 + C, the rearrangement of D = 0 in l3."""
    l1, l2 = to_common(l1, l2)
    return ((l1 - l2) ** 2,
            -2 * (l1 * (l2 - 1) ** 2 + l2 * (l1 - 1) ** 2),
            (l1 * l2 - 1) ** 2)


def antipodal_check(lam: FieldElem) -> bool:
    """Superspeciality of the l1 = l2 = lam, mu = -1 family: H_p(lam) = H_p(lam^2) = 0."""
    if not lam or lam * lam == 1:
        raise DegenerateError("lambda must avoid 0 and +-1")
    H = hasse_poly(lam.ctx.p)
    return not H(lam) and not H(lam * lam)


def antipodal_ab(lam: FieldElem) -> tuple[FieldElem, FieldElem]:
    """Standard-form (a, b) of the l1 = l2 = lam, mu = -1 Howe curve.

    Uses the square-root pair (s, -s) with s^2 = lam, which yields
    l3 = (lam + 1)^2 / (4 lam), the value forced by mu = -1.
    """
    from .standard_form import ab_from_sqrt_lambdas

    s = sqrt_lift(lam)
    return ab_from_sqrt_lambdas(s, -s)
