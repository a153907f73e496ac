"""The fields F_p, F_{p^2}, F_{p^4}, F_{p^8}.

Every field is presented directly over F_p as F_p[t]/(m(t)) with a
deterministically chosen monic irreducible ``m``.  The smaller fields of the
tower embed into the larger ones through a fixed image of their generator,
found once by root-finding.

Elements are immutable :class:`FieldElem` values.  Canonical element order is
lexicographic on the coefficient vector ``(c0, c1, ..., c_{k-1})``; the
integer :meth:`FieldElem.index` realises the same order.
"""

from __future__ import annotations

import functools
import itertools
import re

import numpy as np

from . import poly
from .errors import FieldError

SUPPORTED_DEGREES = (1, 2, 4, 8)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Odd primes ``p`` with ``lo <= p <= hi``."""
    return [n for n in range(max(lo, 3), hi + 1) if is_prime(n)]


# --- F_p[t] helpers used only while choosing moduli -------------------------

def _fp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = [c % p for c in a]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for d in range(len(a) - 1, dm - 1, -1):
        c = a[d] * inv_lead % p
        if c:
            for i, mi in enumerate(m):
                a[d - dm + i] = (a[d - dm + i] - c * mi) % p
    return _fp_trim(a[:dm])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_trim(c % p for c in out)


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _fp_trim((x - y) % p for x, y in zip(a, b))


def _fp_divmod(a, b, p):
    a = [c % p for c in a]
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    quo = [0] * max(len(a) - db, 0)
    for d in range(len(a) - 1, db - 1, -1):
        c = a[d] * inv_lead % p
        if c:
            quo[d - db] = c
            for i, bi in enumerate(b):
                a[d - db + i] = (a[d - db + i] - c * bi) % p
    return _fp_trim(quo), _fp_trim(a[:db])


def _fp_gcd(a, b, p):
    a, b = _fp_trim(a), _fp_trim(b)
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_frobenius_power(m, p, times):
    """t^(p^times) mod m."""
    r = [0, 1]
    for _ in range(times):
        acc, base, e = [1], r, p
        while e:
            if e & 1:
                acc = _fp_mod(_fp_mul(acc, base, p), m, p)
            e >>= 1
            if e:
                base = _fp_mod(_fp_mul(base, base, p), m, p)
        r = acc
    return r


def is_irreducible_fp(m, p: int) -> bool:
    """Rabin test for a monic ``m`` over F_p whose degree is a power of two."""
    k = len(m) - 1
    if k == 1:
        return True
    if _fp_frobenius_power(m, p, k) != [0, 1]:
        return False
    # the only maximal proper divisor of a power of two is k/2
    diff = _fp_frobenius_power(m, p, k // 2) + [0, 0]
    diff[1] = (diff[1] - 1) % p
    return len(_fp_gcd(m, _fp_trim(diff), p)) == 1


def least_nonresidue(p: int) -> int:
    for r in range(2, p):
        if pow(r, (p - 1) // 2, p) == p - 1:
            return r
    raise FieldError(f"no quadratic non-residue mod {p}")


def _choose_modulus(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    if k == 2:
        return ((-least_nonresidue(p)) % p, 0, 1)
    # lexicographic scan over (c0, ..., c_{k-1}); c0 = 0 is divisible by t
    for lower in itertools.product(range(1, p), *([range(p)] * (k - 1))):
        m = list(lower) + [1]
        if is_irreducible_fp(m, p):
            return tuple(m)
    raise FieldError(f"no irreducible of degree {k} over F_{p}")


# --- contexts and elements ----------------------------------------------------

class FieldCtx:
    """F_{p^k} = F_p[t]/(modulus).  Build instances with :func:`make_ctx`."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = modulus
        self.zero = FieldElem(self, (0,) * k)
        self.one = FieldElem(self, (1,) + (0,) * (k - 1))
        self.gen = FieldElem(self, (0, 1) + (0,) * (k - 2)) if k > 1 else self.zero
        self.base: FieldCtx | None = None
        self._gen_images: dict[int, FieldElem] = {}
        self._power_tables: dict[int, list[FieldElem]] = {}
        self._nonresidue: FieldElem | None = None
        self._vec = None

    def __repr__(self):
        return f"FieldCtx(p={self.p}, k={self.k}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __call__(self, value) -> FieldElem:
        """Coerce an int, a coefficient sequence, or an element string."""
        if isinstance(value, FieldElem):
            return embed(value, self)
        if isinstance(value, str):
            return parse_element(value, self)
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, (int(value) % self.p,) + (0,) * (self.k - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            raise FieldError(f"{len(coeffs)} coefficients for a degree-{self.k} field")
        return FieldElem(self, tuple(coeffs) + (0,) * (self.k - len(coeffs)))

    def from_index(self, idx: int) -> FieldElem:
        idx = int(idx)
        coeffs = []
        for _ in range(self.k):
            idx, c = divmod(idx, self.p)
            coeffs.append(c)
        return FieldElem(self, tuple(reversed(coeffs)))

    def elements(self):
        """All q elements in canonical order."""
        for idx in range(self.q):
            yield self.from_index(idx)

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @property
    def vec(self):
        """Vectorised kernel for this field (see :mod:`howe3.vectorized`)."""
        if self._vec is None:
            from .vectorized import VecField
            self._vec = VecField(self)
        return self._vec

    @property
    def nonresidue(self) -> FieldElem:
        """The first quadratic non-residue in canonical order."""
        if self._nonresidue is None:
            half = (self.q - 1) // 2
            for idx in range(1, self.q):
                z = self.from_index(idx)
                if z ** half != self.one:
                    self._nonresidue = z
                    break
        return self._nonresidue

    # raw coefficient-tuple arithmetic

    def _mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return ((a[0] * b[0]) % p,)
        if k == 2:
            # t^2 = r
            r = -self.modulus[0]
            a0, a1 = a
            b0, b1 = b
            return ((a0 * b0 + r * a1 * b1) % p, (a0 * b1 + a1 * b0) % p)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        m = self.modulus
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d] % p
            if c:
                off = d - k
                for i in range(k):
                    prod[off + i] -= c * m[i]
        return tuple(x % p for x in prod[:k])

    def _inv(self, a):
        p = self.p
        if self.k == 1:
            return (pow(a[0], p - 2, p),)
        # extended Euclid in F_p[t], tracking s with s*a = r (mod m)
        r0, r1 = list(self.modulus), _fp_trim(a)
        s0, s1 = [], [1]
        while len(r1) > 1:
            quo, rem = _fp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _fp_sub(s0, _fp_mul(quo, s1, p), p)
        c = pow(r1[0], p - 2, p)
        s = [(x * c) % p for x in s1] + [0] * self.k
        return tuple(s[:self.k])

    def power_table(self, src_k: int) -> list[FieldElem]:
        """Powers 1, g, ..., g^(src_k-1) of the image of the degree-``src_k`` generator."""
        if src_k not in self._power_tables:
            g = self.generator_image(src_k)
            pw = [self.one]
            for _ in range(src_k - 1):
                pw.append(pw[-1] * g)
            self._power_tables[src_k] = pw
        return self._power_tables[src_k]

    def generator_image(self, src_k: int) -> FieldElem:
        if src_k not in self._gen_images:
            if src_k == self.k:
                img = self.gen
            elif src_k == 1:
                img = self.zero
            elif self.k % src_k or src_k > self.k:
                raise FieldError(f"no tower path from degree {src_k} to degree {self.k}")
            else:
                # go through the immediate base
                img = embed(self.base.generator_image(src_k), self)
            self._gen_images[src_k] = img
        return self._gen_images[src_k]


class FieldElem:
    """An element of a :class:`FieldCtx`; ``coeffs`` are residues in [0, p)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: tuple[int, ...]):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldError(f"context mismatch: {self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, int):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.ctx.p
        return FieldElem(self.ctx, tuple((-x) % p for x in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.ctx, self.ctx._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inv(self) -> FieldElem:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        return FieldElem(self.ctx, self.ctx._inv(self.coeffs))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == self.ctx(other).coeffs
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.k, self.coeffs))

    def __lt__(self, other: FieldElem):
        return self.coeffs < other.coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"FieldElem({format_element(self)!r}, p={self.ctx.p}, k={self.ctx.k})"

    def __str__(self):
        return format_element(self)

    def index(self) -> int:
        idx = 0
        for c in self.coeffs:
            idx = idx * self.ctx.p + c
        return idx

    def in_prime_field(self) -> bool:
        return not any(self.coeffs[1:])


@functools.lru_cache(maxsize=None)
def make_ctx(p: int, k: int) -> FieldCtx:
    """The deterministic context for F_{p^k}.

    ``k = 2`` uses ``t^2 - r`` with ``r`` the least non-residue; ``k = 4, 8``
    use the first irreducible in lexicographic order of ``(c0, ..., c_{k-1})``.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if p == 2:
        raise FieldError("characteristic 2 is not supported")
    if k not in SUPPORTED_DEGREES:
        raise FieldError(f"unsupported extension degree {k}; use one of {SUPPORTED_DEGREES}")
    ctx = FieldCtx(p, k, _choose_modulus(p, k))
    if k > 1:
        base = make_ctx(p, k // 2)
        ctx.base = base
        mod_poly = [ctx(c) for c in base.modulus]
        rts = poly.roots(mod_poly, ctx)
        if len(rts) != base.k:
            raise FieldError(f"modulus of F_{p}^{base.k} does not split in F_{p}^{k}")
        ctx._gen_images[base.k] = rts[0]
    return ctx


def embed(x: FieldElem, target: FieldCtx) -> FieldElem:
    """Image of ``x`` under the fixed tower embedding into ``target``."""
    src = x.ctx
    if src.p != target.p:
        raise FieldError("different characteristics")
    if src.k == target.k:
        return x
    if src.k > target.k or target.k % src.k:
        raise FieldError(f"no tower path from degree {src.k} to degree {target.k}")
    if src.k == 1:
        return target(x.coeffs[0])
    pw = target.power_table(src.k)
    acc = target.zero
    for c, g in zip(x.coeffs, pw):
        if c:
            acc = acc + g * c
    return acc


def lift(x: FieldElem, k: int) -> FieldElem:
    return embed(x, make_ctx(x.ctx.p, k))


def common_ctx(*xs: FieldElem) -> FieldCtx:
    k = max(x.ctx.k for x in xs)
    return make_ctx(xs[0].ctx.p, k)


def to_common(*xs: FieldElem) -> list[FieldElem]:
    ctx = common_ctx(*xs)
    return [embed(x, ctx) for x in xs]


def descend(x: FieldElem, k: int) -> FieldElem | None:
    """Preimage of ``x`` in the degree-``k`` subfield, or None if not there."""
    if x.ctx.k == k:
        return x
    if k == 1:
        return make_ctx(x.ctx.p, 1)(x.coeffs[0]) if x.in_prime_field() else None
    sub = make_ctx(x.ctx.p, k)
    if not in_subfield(x, k):
        return None
    # solve sum_i c_i g^i = x over F_p
    pw = x.ctx.power_table(k)
    rows = [[g.coeffs[j] for g in pw] + [x.coeffs[j]] for j in range(x.ctx.k)]
    return sub(_solve_mod_p(rows, k, x.ctx.p))


def _solve_mod_p(rows, n, p):
    """Solve a consistent augmented system (rows of length n+1) over F_p."""
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    sol = [0] * n
    for i, col in enumerate(pivots):
        sol[col] = rows[i][n]
    return sol


def frobenius(x: FieldElem, times: int = 1) -> FieldElem:
    for _ in range(times):
        x = x ** x.ctx.p
    return x


def in_subfield(x: FieldElem, d: int) -> bool:
    """True iff ``x`` lies in F_{p^d} (for ``d`` dividing the degree)."""
    if x.ctx.k % d:
        raise FieldError(f"F_p^{d} is not a subfield of F_p^{x.ctx.k}")
    return x ** (x.ctx.p ** d) == x


def is_square(x: FieldElem) -> bool:
    if not x:
        return True
    return x ** ((x.ctx.q - 1) // 2) == x.ctx.one


def is_fourth_power(x: FieldElem) -> bool:
    if not x:
        return True
    if (x.ctx.q - 1) % 4:
        raise FieldError("4 does not divide q - 1")
    return x ** ((x.ctx.q - 1) // 4) == x.ctx.one


def sqrt(x: FieldElem) -> FieldElem | None:
    """Square root by Tonelli-Shanks; the root with the smaller canonical encoding.

    Returns None for non-squares.
    """
    ctx = x.ctx
    if not x:
        return x
    if not is_square(x):
        return None
    q = ctx.q
    s, odd = 0, q - 1
    while odd % 2 == 0:
        s, odd = s + 1, odd // 2
    z = ctx.nonresidue
    m = s
    c = z ** odd
    t = x ** odd
    r = x ** ((odd + 1) // 2)
    while t != ctx.one:
        i, t2 = 0, t
        while t2 != ctx.one:
            t2 = t2 * t2
            i += 1
        b = c
        for _ in range(m - i - 1):
            b = b * b
        m = i
        c = b * b
        t = t * c
        r = r * b
    other = -r
    return min(r, other)


def sqrt_lift(x: FieldElem) -> FieldElem:
    """A square root of ``x``, moving up one tower level if needed."""
    r = sqrt(x)
    if r is not None:
        return r
    if x.ctx.k == SUPPORTED_DEGREES[-1]:
        raise FieldError("square root would leave F_{p^8}")
    r = sqrt(lift(x, 2 * x.ctx.k))
    assert r is not None
    return r


def sqrt_all(xs) -> list[FieldElem]:
    """Square roots of all ``xs`` in the smallest common tower field."""
    xs = to_common(*xs)
    k = xs[0].ctx.k
    while True:
        roots = [sqrt(x) for x in xs]
        if all(r is not None for r in roots):
            return roots
        if k == SUPPORTED_DEGREES[-1]:
            raise FieldError("square roots would leave F_{p^8}")
        k *= 2
        xs = [lift(x, k) for x in xs]


# --- text format ---------------------------------------------------------------

def format_element(x: FieldElem) -> str:
    terms = []
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*t")
        else:
            terms.append(f"{c}*t^{i}")
    return "+".join(terms) if terms else "0"


_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)\s*(?:\*\s*)?)?(t(?:\s*\^\s*(\d+))?)?\s*")


def parse_element(text: str, ctx: FieldCtx) -> FieldElem:
    """Parse ``"c0+c1*t+c2*t^2"``-style input (signs and any term order allowed)."""
    s = text.strip()
    if not s:
        raise FieldError("empty element string")
    coeffs = [0] * ctx.k
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise FieldError(f"cannot parse element {text!r}")
        sign, num, tpart, exp = m.groups()
        if not sign and not first:
            raise FieldError(f"missing operator in {text!r}")
        first = False
        c = int(num) if num else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if tpart else 0
        if e >= ctx.k:
            raise FieldError(f"power t^{e} outside a degree-{ctx.k} field")
        coeffs[e] += c
        pos = m.end()
    return ctx(coeffs)
