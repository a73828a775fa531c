"""Numerical Grothendieck groups from integer Euler-pairing matrices.

Everything here is exact integer linear algebra: Smith normal form with
transform tracking for kernels and quotients, Hermite normal form for
canonical lattice bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ValidationError


IntMatrix = list[list[int]]


def _copy(m: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(row) for row in m]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if not a or not b:
        return []
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def smith_normal_form(m: Sequence[Sequence[int]]):
    """Returns (d, u, v) with u*m*v = d diagonal, d_i | d_{i+1}, u,v unimodular."""
    d = _copy(m)
    rows = len(d)
    cols = len(d[0]) if rows else 0
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        d[dst] = [a + c * b for a, b in zip(d[dst], d[src])]
        u[dst] = [a + c * b for a, b in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in d:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        d[i] = [-a for a in d[i]]
        u[i] = [-a for a in u[i]]

    t = 0
    while t < min(rows, cols):
        # find pivot: nonzero entry of smallest magnitude in the submatrix
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                    best = abs(d[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        # clear row and column t
        while True:
            progress = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    add_row(t, i, -q)
                    if d[i][t] != 0:
                        swap_rows(t, i)
                    progress = True
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    add_col(t, j, -q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                    progress = True
            if not progress:
                break
        # enforce divisibility d[t][t] | d[i][j]
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    add_row(i, t, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if d[t][t] < 0:
                negate_row(t)
            t += 1
    return d, u, v


def hermite_rows(vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by `vectors`
    (nonzero rows only, positive pivots, entries above pivots reduced)."""
    m = [list(v) for v in vectors if any(v)]
    if not m:
        return []
    cols = len(m[0])
    pivot_row = 0
    for col in range(cols):
        # gcd-reduce all rows below pivot_row in this column
        while True:
            nz = [i for i in range(pivot_row, len(m)) if m[i][col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda i: abs(m[i][col]))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][col] // m[i0][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
        nz = [i for i in range(pivot_row, len(m)) if m[i][col] != 0]
        if not nz:
            continue
        i0 = nz[0]
        m[pivot_row], m[i0] = m[i0], m[pivot_row]
        if m[pivot_row][col] < 0:
            m[pivot_row] = [-a for a in m[pivot_row]]
        for i in range(pivot_row):
            q = m[i][col] // m[pivot_row][col]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[pivot_row])]
        pivot_row += 1
    return [row for row in m[:pivot_row]]


@dataclass(frozen=True)
class EulerGram:
    chi: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.chi)
        if any(len(row) != n for row in self.chi):
            raise ValidationError("Euler Gram matrix must be square")

    @property
    def n(self) -> int:
        return len(self.chi)

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "EulerGram":
        return EulerGram(tuple(tuple(int(x) for x in row) for row in rows))

    def to_json(self) -> dict:
        return {"chi": [list(row) for row in self.chi]}

    @staticmethod
    def from_json(data: dict) -> "EulerGram":
        return EulerGram.from_rows(data["chi"])


def right_kernel(g: EulerGram) -> list[list[int]]:
    """Hermite-reduced Z-basis of {v : chi v = 0}."""
    if g.n == 0:
        return []
    d, _, v = smith_normal_form(g.chi)
    cols = g.n
    basis = []
    for j in range(cols):
        diag = d[j][j] if j < len(d) and j < cols else 0
        if j >= min(len(d), cols) or diag == 0:
            basis.append([v[i][j] for i in range(cols)])
    return hermite_rows(basis)


def left_kernel(g: EulerGram) -> list[list[int]]:
    """Hermite-reduced Z-basis of {v : v^T chi = 0}."""
    transposed = EulerGram.from_rows(list(map(list, zip(*g.chi))) if g.n else [])
    return right_kernel(transposed)


@dataclass
class NumK0Report:
    rank: int
    left_kernel_basis: list[list[int]]
    right_kernel_basis: list[list[int]]
    kernels_agree: bool
    quotient_basis: list[list[int]]
    warning: str | None = None

    def to_json(self) -> dict:
        out = {
            "rank": self.rank,
            "left_kernel_basis": self.left_kernel_basis,
            "right_kernel_basis": self.right_kernel_basis,
            "kernels_agree": self.kernels_agree,
            "quotient_basis": self.quotient_basis,
        }
        if self.warning:
            out["warning"] = self.warning
        return out


def _saturate(vectors: list[list[int]], n: int) -> list[list[int]]:
    """Smallest saturated sublattice of Z^n containing span(vectors)."""
    if not vectors:
        return []
    d, u, _ = smith_normal_form(vectors)
    # rows of u^{-1} scaled... simpler: saturation = kernel of any integer
    # matrix with the same rational row space; use the SNF of the matrix
    # whose kernel is the orthogonal complement twice.
    comp = right_kernel(EulerGram.from_rows(_pad_square(vectors, n)))
    if not comp:
        return hermite_rows(_identity(n))
    sat = right_kernel(EulerGram.from_rows(_pad_square(comp, n)))
    return sat


def _pad_square(vectors: list[list[int]], n: int) -> list[list[int]]:
    rows = [list(v) for v in vectors]
    while len(rows) < n:
        rows.append([0] * n)
    return rows[:n]


def num_grothendieck(g: EulerGram) -> NumK0Report:
    lk = left_kernel(g)
    rk = right_kernel(g)
    agree = lk == rk
    kernel = rk
    warning = None
    if not agree:
        warning = "left and right kernels differ (non-smooth input); using right kernel"
    kernel = _saturate(kernel, g.n)
    rank = g.n - len(kernel)
    # quotient basis: complete the kernel to a basis of Z^n via SNF of the
    # kernel inclusion; the complementary columns of V^{-T}... we instead
    # take the HNF of a complement built from unit vectors.
    quotient = _complement_basis(kernel, g.n)
    return NumK0Report(
        rank=rank,
        left_kernel_basis=lk,
        right_kernel_basis=rk,
        kernels_agree=agree,
        quotient_basis=quotient,
        warning=warning,
    )


def _complement_basis(kernel: list[list[int]], n: int) -> list[list[int]]:
    """Unit vectors completing the (saturated) kernel to a basis of Z^n;
    their classes form a free basis of the quotient."""
    if n == 0:
        return []
    if not kernel:
        return _identity(n)
    # pivot columns of the HNF kernel basis
    pivots = set()
    for row in kernel:
        for j, x in enumerate(row):
            if x != 0:
                pivots.add(j)
                break
    out = []
    for j in range(n):
        if j not in pivots:
            out.append([int(i == j) for i in range(n)])
    # len(out) = n - len(kernel) because the kernel is saturated and in HNF
    return out


def kernel_is_saturated(kernel: list[list[int]]) -> bool:
    """SNF diagonal of the kernel basis is all ones."""
    if not kernel:
        return True
    d, _, _ = smith_normal_form(kernel)
    r = min(len(d), len(d[0]))
    diag = [d[i][i] for i in range(r) if d[i][i] != 0]
    return all(x == 1 for x in diag) and len(diag) == len(kernel)


def beilinson_gram(n: int) -> EulerGram:
    """Euler pairing of the standard exceptional collection on P^n:
    chi_ij = C(n+j-i, n) for j >= i, 0 below the diagonal."""
    if n < 0:
        raise ValidationError("dimension must be >= 0")
    return EulerGram.from_rows(
        [
            [math.comb(n + j - i, n) if j >= i else 0 for j in range(n + 1)]
            for i in range(n + 1)
        ]
    )


def quiver_gram(vertices: int, arrows: Sequence[tuple[int, int]]) -> EulerGram:
    """Euler form of an acyclic quiver algebra: chi = I - arrow-count matrix."""
    counts = [[0] * vertices for _ in range(vertices)]
    adjacency = [[False] * vertices for _ in range(vertices)]
    for a, b in arrows:
        if not (0 <= a < vertices and 0 <= b < vertices):
            raise ValidationError(f"arrow ({a},{b}) out of range")
        counts[a][b] += 1
        adjacency[a][b] = True
    # cycle detection (self-loops included)
    color = [0] * vertices

    def dfs(x):
        color[x] = 1
        for y in range(vertices):
            if adjacency[x][y]:
                if color[y] == 1:
                    raise ValidationError("quiver has a cycle")
                if color[y] == 0:
                    dfs(y)
        color[x] = 2

    for x in range(vertices):
        if color[x] == 0:
            dfs(x)
    return EulerGram.from_rows(
        [
            [int(i == j) - counts[i][j] for j in range(vertices)]
            for i in range(vertices)
        ]
    )


def phi_pairing_check(g: EulerGram, opposite_g: EulerGram) -> bool:
    """True iff the right kernels of the two pairings coincide as lattices."""
    if g.n != opposite_g.n:
        raise ValidationError("pairing matrices must have matching rank")
    return right_kernel(g) == right_kernel(opposite_g)
