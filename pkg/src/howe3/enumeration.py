"""Enumeration of superspecial standard-form curves and the per-prime counts table.

Two independent routes produce the candidate (a, b) pairs:

* structured: invert the Legendre parametrization over all pairs of square
  roots of supersingular Legendre parameters (they all lie in F_{p^2});
* brute: scan every (a, b) in F_{p^2} x F_{p^2} with the batched Hasse-Witt test.

Both feed the same classifier, so agreement of the two checks the inversion
route's completeness.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .classify import (LABEL_ORDER, AutGroup, Signature, calibrate, label_for_order,
                       signatures)
from .errors import HoweError, InvariantViolation, TooLargeError
from .field_tower import FieldElem, is_prime, make_ctx, primes_between, sqrt
from .point_count import Verdict, verify_superspecial_count
from .standard_form import CurveAB
from .supersingular import hasse_witt_pairs, superspecial_grid, supersingular_lambdas

BRUTE_MAX_P = 31


@dataclass
class IsoClassRecord:
    p: int
    representative: tuple[FieldElem, FieldElem]
    aut: AutGroup | None
    reduced_order: int
    N: int
    verdict: Verdict
    size: int  # ordered (a, b) pairs found in the class
    provenance: list[tuple[FieldElem, FieldElem]] = field(default_factory=list)
    signature: tuple[int, ...] = ()

    def to_json(self) -> dict:
        a, b = self.representative
        return {
            "p": self.p, "a": str(a), "b": str(b),
            "aut": self.aut.value if self.aut else None,
            "reduced_order": self.reduced_order,
            "N": self.N, "verdict": self.verdict.value, "size": self.size,
            "provenance": [[str(s1), str(s2)] for s1, s2 in self.provenance],
        }


@dataclass
class CountsRow:
    p: int
    counts: dict[AutGroup, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.counts.get(g, 0) for g in LABEL_ORDER)


# --- candidate generation -----------------------------------------------------

def _nonsingular_mask(V, a, b):
    two, mtwo = V.const(2), V.const(-2)
    bad = V.is_zero(V.sub(a, b))
    for c in (two, mtwo):
        bad |= V.is_zero(V.sub(a, c)) | V.is_zero(V.sub(b, c))
    return ~bad


def structured_candidates(p: int):
    """Superspecial nonsingular (a, b) from pairs of square roots of supersingular lambdas.

    Returns {(idx_a, idx_b): (sqrt_l1, sqrt_l2)} keeping the first pair that produced each.
    """
    ctx = make_ctx(p, 2)
    V = ctx.vec
    roots = []
    for lam in supersingular_lambdas(p):
        s = sqrt(lam)
        if s is None:
            raise InvariantViolation(f"supersingular lambda {lam} has no square root in F_{p}^2")
        roots.extend(sorted({s, -s}))
    if not roots:
        return {}
    R = V.asarray(roots)
    n = len(roots)
    i1, i2 = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    i1, i2 = i1.ravel(), i2.ravel()
    s1, s2 = R[i1], R[i2]
    one = V.const(1)
    s12 = V.mul(s1, s2)
    den = V.mul(V.sub(s1, s2), V.sub(s12, one))
    ok = ~V.is_zero(den)
    s1, s2, s12, den, i1, i2 = s1[ok], s2[ok], s12[ok], den[ok], i1[ok], i2[ok]
    l1, l2 = V.mul(s1, s1), V.mul(s2, s2)
    common = V.add(V.add(V.mul(l1, s2), V.mul(s1, l2)), V.add(s1, s2))
    four_s12 = V.mul(V.const(4), s12)
    inv = V.inv(den)
    two = V.const(2)
    a = V.mul(V.mul(two, V.add(common, four_s12)), inv)
    b = V.mul(V.mul(two, V.sub(common, four_s12)), inv)
    keep = _nonsingular_mask(V, a, b)
    a, b, i1, i2 = a[keep], b[keep], i1[keep], i2[keep]
    ia, ib = V.encode(a), V.encode(b)
    first = {}
    for x, y, u, v in zip(ia.tolist(), ib.tolist(), i1.tolist(), i2.tolist()):
        first.setdefault((x, y), (roots[u], roots[v]))
    keys = sorted(first)
    A = V.decode(np.array([k[0] for k in keys]))
    B = V.decode(np.array([k[1] for k in keys]))
    hw = hasse_witt_pairs(ctx, A, B)
    ss = ~hw.reshape(len(keys), -1).any(axis=1)
    return {k: first[k] for k, s in zip(keys, ss) if s}


def brute_candidates(p: int):
    if p > BRUTE_MAX_P:
        raise TooLargeError(f"brute-force enumeration is limited to p <= {BRUTE_MAX_P}")
    ctx = make_ctx(p, 2)
    V = ctx.vec
    grid = superspecial_grid(p)
    ia, ib = np.nonzero(grid)
    keep = _nonsingular_mask(V, V.decode(ia), V.decode(ib))
    return {(int(x), int(y)): None for x, y in zip(ia[keep], ib[keep])}


# --- classification -------------------------------------------------------------

def _loci_array(V, keys):
    """Branch loci for encoded (a, b) pairs; every root must lie in F_{p^2}."""
    p = V.p
    elems = V.elements()
    sq_idx = V.encode(V.mul(elems, elems))
    root_of = np.full(V.q, -1, dtype=np.int64)
    root_of[sq_idx] = np.arange(V.q)
    A = V.decode(np.array([k[0] for k in keys], dtype=np.int64))
    B = V.decode(np.array([k[1] for k in keys], dtype=np.int64))
    half = V.const(pow(2, p - 2, p))
    loci = []
    for c in (A, B):
        ap = root_of[V.encode(V.add(c, V.const(2)))]
        am = root_of[V.encode(V.sub(c, V.const(2)))]
        if (ap < 0).any() or (am < 0).any():
            raise InvariantViolation("branch points of a superspecial curve outside F_{p^2}")
        ap, am = V.decode(ap), V.decode(am)
        for s in (1, -1):
            for t in (1, -1):
                r = V.add(V.mul(V.const(s), ap), V.mul(V.const(t), am))
                loci.append(V.mul(r, half))
    return np.stack(loci, axis=1)


def _classify(p: int, candidates: dict, labels: bool = True) -> list[IsoClassRecord]:
    ctx = make_ctx(p, 2)
    V = ctx.vec
    if not candidates:
        return []
    # (a, b) and (b, a) give the same curve, so classify unordered pairs once
    unordered = sorted({tuple(sorted(k)) for k in candidates})
    sigs = signatures(V, _loci_array(V, unordered))
    by_sig: dict[tuple, list] = {}
    sig_of: dict[tuple, Signature] = {}
    for key, sig in zip(unordered, sigs):
        by_sig.setdefault(sig.values, []).append(key)
        sig_of[sig.values] = sig
    if labels and p > 7:
        calibrate(p)
    records = []
    for values, members in by_sig.items():
        ordered = sorted({m for u in members for m in (u, u[::-1])})
        rep_idx = ordered[0]
        a, b = ctx.from_index(rep_idx[0]), ctx.from_index(rep_idx[1])
        order = sig_of[values].reduced_order
        label = label_for_order(order) if labels and p > 7 else None
        report = verify_superspecial_count(CurveAB(a, b))
        if not report.agrees:
            raise InvariantViolation(f"point count {report.count.N} contradicts the prediction at p = {p}")
        prov = sorted({candidates[m] for m in ordered if candidates.get(m) is not None})
        records.append(IsoClassRecord(p, (a, b), label, order, report.count.N, report.count.verdict,
                                      len(ordered), prov, values))
    records.sort(key=lambda r: (r.representative[0].index(), r.representative[1].index()))
    return records


def enumerate_structured(p: int, labels: bool = True) -> list[IsoClassRecord]:
    _check_prime(p)
    return _classify(p, structured_candidates(p), labels)


def enumerate_brute(p: int, labels: bool = True) -> list[IsoClassRecord]:
    _check_prime(p)
    return _classify(p, brute_candidates(p), labels)


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p) or p < 3:
        raise HoweError(f"{p} is not an odd prime")


def counts_row(p: int, records: list[IsoClassRecord]) -> CountsRow:
    c = Counter(r.aut for r in records)
    return CountsRow(p, {g: c.get(g, 0) for g in LABEL_ORDER})


def table(p_min: int, p_max: int) -> list[CountsRow]:
    """One row per prime in [p_min, p_max] (zero rows included; renderers may hide them)."""
    if not (7 < p_min <= p_max < 1000):
        raise HoweError("table needs 7 < p_min <= p_max < 1000")
    return [counts_row(p, enumerate_structured(p)) for p in primes_between(p_min, p_max)]
