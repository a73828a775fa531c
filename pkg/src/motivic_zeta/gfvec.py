"""Vectorized finite-field arithmetic on digit arrays.

Elements of F_{p^k} are stored as numpy arrays of base-p digits, shape
(N, k), one row per element (row i of digits_of_range(a, b) is the element
whose base-p packed integer is a+i, matching FqElement.to_int).  Products
use schoolbook convolution plus a precomputed reduction matrix for the
modulus; Frobenius powers and multiplication by a fixed constant are
F_p-linear and applied as k x k digit matrices.  This keeps exhaustive
enumeration over fields of ~10^7 elements within seconds.
"""

from __future__ import annotations

import numpy as np

from .gf import FqElement, FqField


class VecField:
    def __init__(self, field: FqField):
        self.field = field
        self.p = field.p
        self.k = field.e
        k, p = self.k, self.p
        # reduction rows: x^{k+i} mod modulus as digit vectors, i = 0..k-2
        x = field.element([0, 1]) if k > 1 else field.element(0)
        rows = []
        for i in range(k - 1):
            elt = x ** (k + i) if k > 1 else field.element(0)
            rows.append(list(elt.coeffs))
        self.reduce_rows = np.array(rows, dtype=np.int64).reshape(max(k - 1, 0), k)
        # float64 arithmetic stays exact while every intermediate fits in
        # 2^53; then BLAS handles the reduction matmul instead of the slow
        # integer fallback
        bound = k * (p - 1) ** 2 * ((p - 1) * max(k - 1, 1) + 1)
        self._use_float = bound < 2**53
        self._reduce_f = self.reduce_rows.astype(np.float64)

    def digits_of_range(self, start: int, stop: int) -> np.ndarray:
        n = np.arange(start, stop, dtype=np.int64)
        out = np.empty((stop - start, self.k), dtype=np.int16)
        for i in range(self.k):
            out[:, i] = n % self.p
            n //= self.p
        return out

    def from_element(self, elt: FqElement) -> np.ndarray:
        return np.array([elt.coeffs], dtype=np.int16)

    def zeros(self, n: int) -> np.ndarray:
        return np.zeros((n, self.k), dtype=np.int16)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        k, p = self.k, self.p
        n = max(a.shape[0], b.shape[0])
        dtype = np.float64 if self._use_float else np.int64
        conv = np.zeros((n, 2 * k - 1), dtype=dtype)
        af = a.astype(dtype)
        bf = b.astype(dtype)
        for i in range(k):
            conv[:, i : i + k] += af[:, i : i + 1] * bf
        low = conv[:, :k]
        if k > 1:
            reduce = self._reduce_f if self._use_float else self.reduce_rows
            low = low + conv[:, k:] @ reduce
        return (low % p).astype(np.int16)

    def power(self, a: np.ndarray, e: int) -> np.ndarray:
        if e == 1:
            return a
        result = self.zeros(a.shape[0])
        result[:, 0] = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def linear_map(self, a: np.ndarray, m: np.ndarray) -> np.ndarray:
        """Apply the F_p-linear map whose i-th row is the image of x^i."""
        if self._use_float:
            return (a.astype(np.float64) @ m.astype(np.float64) % self.p).astype(np.int16)
        return (a.astype(np.int64) @ m % self.p).astype(np.int16)

    def frobenius_matrix(self, power_of_p: int) -> np.ndarray:
        """Digit matrix of x -> x^{p^m}; rows are images of the basis x^i."""
        rows = []
        exp = self.p**power_of_p
        for i in range(self.k):
            basis = self.field.element([0] * i + [1])
            rows.append(list((basis**exp).coeffs))
        return np.array(rows, dtype=np.int64)

    def const_mul_matrix(self, c: FqElement) -> np.ndarray:
        """Digit matrix of x -> c*x."""
        rows = []
        for i in range(self.k):
            basis = self.field.element([0] * i + [1])
            rows.append(list((c * basis).coeffs))
        return np.array(rows, dtype=np.int64)

    def is_zero(self, a: np.ndarray) -> np.ndarray:
        return ~a.any(axis=1)

    def equal(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return ((a - b) % self.p == 0).all(axis=1)
