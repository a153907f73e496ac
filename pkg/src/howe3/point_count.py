"""Brute-force point counts over F_{p^{2e}} and maximal/minimal verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import poly
from .errors import HasseWeilViolation, HoweError, SingularCurveError, TooLargeError
from .field_tower import FieldCtx, FieldElem, descend, embed, in_subfield, is_square, make_ctx
from .standard_form import CurveAB, quotient_quartics
from .supersingular import is_superspecial

MAX_FIELD_SIZE = 10 ** 6


class Verdict(str, Enum):
    MAXIMAL = "Maximal"
    MINIMAL = "Minimal"
    NEITHER = "Neither"


@dataclass(frozen=True)
class CountResult:
    q: int
    genus: int
    N: int
    verdict: Verdict | None

    def to_json(self) -> dict:
        return {"q": self.q, "genus": self.genus, "N": self.N,
                "verdict": self.verdict.value if self.verdict else None}


@dataclass(frozen=True)
class TwistSpec:
    eps: FieldElem
    e: int

    def __post_init__(self):
        if not self.eps:
            raise HoweError("twist parameter must be nonzero")
        if self.e < 1:
            raise HoweError("e must be a positive integer")


def square_root_of_q(ctx: FieldCtx) -> int | None:
    return ctx.p ** (ctx.k // 2) if ctx.k % 2 == 0 else None


def hasse_weil_check(N: int, q: int, genus: int, sqrt_q: int | None = None) -> None:
    """Raise :class:`HasseWeilViolation` if N leaves the Hasse-Weil interval."""
    # floor(2 g sqrt(q)) suffices for integer N
    bound = 2 * genus * sqrt_q if sqrt_q is not None else int(np.floor(2 * genus * np.sqrt(q)))
    if not (1 + q - bound <= N <= 1 + q + bound):
        raise HasseWeilViolation(f"N = {N} outside [{1 + q - bound}, {1 + q + bound}] (q = {q}, g = {genus})")


def verdict_for(N: int, q: int, genus: int, sqrt_q: int) -> Verdict:
    if N == 1 + q + 2 * genus * sqrt_q:
        return Verdict.MAXIMAL
    if N == 1 + q - 2 * genus * sqrt_q:
        return Verdict.MINIMAL
    return Verdict.NEITHER


def _count(f: list[FieldElem], eps: FieldElem, ctx: FieldCtx, genus: int) -> CountResult:
    if ctx.q > MAX_FIELD_SIZE:
        raise TooLargeError(f"q = {ctx.q} exceeds the brute-force limit {MAX_FIELD_SIZE}")
    f = poly.trim([embed(c, ctx) for c in f])
    eps = embed(eps, ctx)
    if not eps:
        raise HoweError("twist parameter must be nonzero")
    if not poly.is_squarefree(f):
        raise SingularCurveError("model has repeated roots")
    V = ctx.vec
    xs = V.elements()
    vals = V.poly_eval(V.asarray([eps * c for c in f]), xs)
    affine = int(ctx.q + V.chi(vals).sum())
    deg = len(f) - 1
    if deg % 2:
        at_infinity = 1
    else:
        at_infinity = 2 if is_square(eps * f[-1]) else 0
    N = affine + at_infinity
    sq = square_root_of_q(ctx)
    hasse_weil_check(N, ctx.q, genus, sq)
    verdict = verdict_for(N, ctx.q, genus, sq) if sq is not None else None
    return CountResult(ctx.q, genus, N, verdict)


def count_hyperelliptic(f: list[FieldElem], eps: FieldElem | int, ctx: FieldCtx) -> CountResult:
    """Points of the smooth model of eps y^2 = f(x), deg f = 8, over ``ctx``."""
    if isinstance(eps, int):
        eps = ctx(eps)
    if len(poly.trim(f)) != 9:
        raise HoweError("expected a degree-8 polynomial")
    return _count(f, eps, ctx, 3)


def count_elliptic_quartic(g: list[FieldElem], ctx: FieldCtx, eps: FieldElem | int = 1) -> CountResult:
    if isinstance(eps, int):
        eps = ctx(eps)
    if len(poly.trim(g)) != 5:
        raise HoweError("expected a degree-4 polynomial")
    return _count(g, eps, ctx, 1)


def count_legendre(lam: FieldElem, ctx: FieldCtx) -> CountResult:
    """Points of y^2 = x(x-1)(x-lam) over ``ctx``."""
    lam = embed(lam, ctx)
    cubic = poly.mul(poly.mul([ctx.zero, ctx.one], [-ctx.one, ctx.one]), [-lam, ctx.one])
    return _count(cubic, ctx.one, ctx, 1)


def predicted_verdict(p: int) -> Verdict:
    return Verdict.MAXIMAL if p % 4 == 3 else Verdict.MINIMAL


@dataclass
class SuperspecialReport:
    applicable: bool
    count: CountResult | None = None
    predicted: Verdict | None = None
    ab_in_fp2: bool | None = None
    quotient_verdicts: list[Verdict] = field(default_factory=list)
    reason: str = ""

    @property
    def agrees(self) -> bool:
        return bool(self.applicable and self.ab_in_fp2 and self.count.verdict == self.predicted)

    def to_json(self) -> dict:
        out = {"applicable": self.applicable, "agrees": self.agrees}
        if self.count is not None:
            out.update(self.count.to_json())
            out["predicted"] = self.predicted.value
            out["ab_in_fp2"] = self.ab_in_fp2
            out["quotient_verdicts"] = [v.value for v in self.quotient_verdicts]
        if self.reason:
            out["reason"] = self.reason
        return out


def verify_superspecial_count(c: CurveAB) -> SuperspecialReport:
    """Count C over F_{p^2} and compare with the p mod 4 prediction for superspecial C."""
    c.require_nonsingular()
    if c.ctx.k > 2:
        if not (in_subfield(c.a, 2) and in_subfield(c.b, 2)):
            return SuperspecialReport(False, reason="a, b not in F_{p^2}; count prediction not applicable")
        a, b = descend(c.a, 2), descend(c.b, 2)
    else:
        a, b = c.a, c.b
    ctx = make_ctx(c.p, 2)
    curve = CurveAB(embed(a, ctx), embed(b, ctx))
    if not is_superspecial(curve.a, curve.b):
        return SuperspecialReport(False, reason="curve is not superspecial; count prediction not applicable")
    count = count_hyperelliptic(curve.octic, 1, ctx)
    quotients = [count_elliptic_quartic(g, ctx).verdict for g in quotient_quartics(curve)]
    return SuperspecialReport(True, count, predicted_verdict(c.p), True, quotients)


def twist_predicate(p: int, e: int, eps_square: bool) -> Verdict:
    """Verdict for eps y^2 = f over F_{p^{2e}} when y^2 = f is superspecial."""
    if e % 2:
        maximal = eps_square if p % 4 == 3 else not eps_square
    else:
        maximal = not eps_square
    return Verdict.MAXIMAL if maximal else Verdict.MINIMAL


@dataclass
class TwistReport:
    e: int
    eps_square: bool
    count: CountResult
    predicted: Verdict

    @property
    def agrees(self) -> bool:
        return self.count.verdict == self.predicted

    def to_json(self) -> dict:
        out = self.count.to_json()
        out.update({"e": self.e, "eps_square": self.eps_square,
                    "predicted": self.predicted.value, "agrees": self.agrees})
        return out


def twist_verdict(c: CurveAB, t: TwistSpec) -> TwistReport:
    c.require_nonsingular()
    k = 2 * t.e
    if c.p ** k > MAX_FIELD_SIZE:
        raise TooLargeError(f"p^(2e) = {c.p ** k} exceeds {MAX_FIELD_SIZE}")
    if k not in (2, 4, 8):
        raise TooLargeError(f"F_p^{k} is not in the supported tower")
    if not is_superspecial(c.a, c.b):
        raise HoweError("twist analysis requires a superspecial curve")
    ctx = make_ctx(c.p, k)
    eps = embed(t.eps, ctx)
    count = count_hyperelliptic(c.octic, eps, ctx)
    sq = is_square(eps)
    return TwistReport(t.e, sq, count, twist_predicate(c.p, t.e, sq))
