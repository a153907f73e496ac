"""Array arithmetic in F_{p^k}.

Elements are int64 arrays whose last axis holds the ``k`` coefficients.
Encoded indices use the same canonical order as :meth:`FieldElem.index`.
All intermediate values stay far below 2**63 for p < 10**5 and k <= 8.
"""

from __future__ import annotations

import numpy as np

from .field_tower import FieldCtx, FieldElem


class VecField:
    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.p, self.k, self.q = ctx.p, ctx.k, ctx.q
        self.weights = np.array([ctx.p ** (ctx.k - 1 - i) for i in range(ctx.k)], dtype=np.int64)
        self._red = np.array(ctx.modulus[:ctx.k], dtype=np.int64)
        self._squares = None

    # conversion

    def asarray(self, elems) -> np.ndarray:
        if isinstance(elems, FieldElem):
            return np.array(elems.coeffs, dtype=np.int64)
        return np.array([self.ctx(e).coeffs for e in elems], dtype=np.int64).reshape(-1, self.k)

    def to_elems(self, arr) -> list[FieldElem]:
        arr = np.asarray(arr).reshape(-1, self.k)
        return [FieldElem(self.ctx, tuple(int(c) for c in row)) for row in arr]

    def encode(self, arr) -> np.ndarray:
        return arr @ self.weights

    def decode(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self.weights) % self.p

    def const(self, c, shape=()) -> np.ndarray:
        out = np.zeros(tuple(shape) + (self.k,), dtype=np.int64)
        out[..., :] = self.ctx(c).coeffs
        return out

    def elements(self) -> np.ndarray:
        return self.decode(np.arange(self.q, dtype=np.int64))

    # arithmetic

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def _reduce(self, prod):
        """Reduce (..., 2k-1) coefficient arrays modulo the field polynomial."""
        p, k = self.p, self.k
        prod = prod % p
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[..., d:d + 1]
            prod[..., d - k:d] -= c * self._red
            prod[..., d - k:d] %= p
        return prod[..., :k]

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        shape = np.broadcast_shapes(a.shape, b.shape)
        prod = np.zeros(shape[:-1] + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            ai = a[..., i:i + 1]
            prod[..., i:i + k] += ai * b
        return self._reduce(prod)

    def scale(self, a, c: FieldElem):
        return self.mul(a, self.asarray(c))

    def pow(self, a, e: int):
        result = np.broadcast_to(self.const(1), a.shape).copy()
        base = a.copy()
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a):
        """Elementwise inverse; zero maps to zero."""
        return self.pow(a, self.q - 2)

    def is_zero(self, a):
        return ~a.any(axis=-1)

    # tables

    def square_flags(self) -> np.ndarray:
        """Boolean table over encoded indices: True where the element is a square."""
        if self._squares is None:
            elems = self.elements()
            flags = np.zeros(self.q, dtype=bool)
            flags[self.encode(self.mul(elems, elems))] = True
            self._squares = flags
        return self._squares

    def chi(self, a) -> np.ndarray:
        """Quadratic character (0, 1, -1) of encoded-table elements."""
        idx = self.encode(a)
        out = np.where(self.square_flags()[idx], 1, -1)
        out[idx == 0] = 0
        return out

    # polynomials: arrays of shape (..., n, k), little-endian in the n axis

    def poly_eval(self, coeffs, x):
        """Evaluate the polynomial with coefficient array (n, k) at points x (..., k)."""
        acc = np.zeros_like(x)
        for c in coeffs[::-1]:
            acc = self.add(self.mul(acc, x), c)
        return acc

    def poly_mul(self, f, g):
        """Product of single polynomials f (n, k) and g (m, k)."""
        k = self.k
        n, m = f.shape[0], g.shape[0]
        prod = np.zeros((n + m - 1, 2 * k - 1), dtype=np.int64)
        for u in range(k):
            for v in range(k):
                prod[:, u + v] += np.convolve(f[:, u], g[:, v])
        return self._reduce(prod)

    def poly_pow(self, f, e: int):
        result = self.const(1, (1,))
        base = f
        while e:
            if e & 1:
                result = self.poly_mul(result, base)
            e >>= 1
            if e:
                base = self.poly_mul(base, base)
        return result

    def matmul(self, A, B):
        """out[i, j] = sum_l A[i, l] * B[j, l] for A (n, L, k), B (m, L, k)."""
        p, k = self.p, self.k
        L = A.shape[1]
        exact = L * (p - 1) ** 2 < 2 ** 52
        prod = np.zeros((A.shape[0], B.shape[0], 2 * k - 1), dtype=np.int64)
        for u in range(k):
            for v in range(k):
                if exact:
                    block = np.rint(A[:, :, u].astype(np.float64) @ B[:, :, v].T.astype(np.float64))
                    prod[..., u + v] += block.astype(np.int64) % p
                else:
                    prod[..., u + v] += (A[:, :, u] @ B[:, :, v].T) % p
        return self._reduce(prod)
