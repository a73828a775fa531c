"""Brute-force arithmetic geometry over finite fields.

Varieties are given by integer-coefficient equations in an affine or
projective ambient space over F_{p^e}.  Counting enumerates normalized
point representatives chart by chart (projective: first nonzero
coordinate = 1).  Charts cut out by no equations are counted in closed
form; charts with a single equation that is quadratic in some variable
enumerate the remaining variables and solve; everything else is
exhaustive.  Enumeration work is metered against a budget (default 10^7
assignments, env MOTIVIC_ZETA_BUDGET or per-call override).

Twisted counts #{x : g(Fr^n(x)) = x} enumerate X(F_{q^{n ord(g)}});
large fields go through the vectorized digit engine.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    PreconditionError,
    ResourceError,
    ValidationError,
)
from .exact_core import Polynomial, RationalFunction
from .gf import FqElement, FqField, fq_make, is_prime
from .reconstruct import NotStabilized, traces_to_zeta
from .series import TruncatedSeries, WittElement, exp_from_traces

DEFAULT_BUDGET = 10_000_000
PYTHON_ENUM_LIMIT = 20_000  # above this, one-free-variable loops vectorize
VEC_CHUNK = 1 << 18


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("MOTIVIC_ZETA_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


class BudgetTracker:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int):
        if self.used + amount > self.limit:
            raise ResourceError(
                f"enumeration of {self.used + amount} assignments exceeds "
                f"budget {self.limit}",
                required=self.used + amount,
                budget=self.limit,
            )
        self.used += amount


Term = tuple[tuple[int, ...], int]  # exponent vector, integer coefficient


@dataclass(frozen=True)
class VarietySpec:
    """ambient_kind 'projective' or 'affine'; equations are tuples of
    (exponent vector, integer coefficient) terms."""

    ambient_kind: str
    ambient_dim: int
    p: int
    e: int
    equations: tuple[tuple[Term, ...], ...]

    def __post_init__(self):
        if self.ambient_kind not in ("projective", "affine"):
            raise ValidationError("ambient must be projective or affine")
        if self.ambient_dim < 0:
            raise ValidationError("ambient dimension must be >= 0")
        if not is_prime(self.p):
            raise ValidationError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValidationError("field extension degree must be >= 1")
        nv = self.num_vars
        for eq in self.equations:
            degrees = set()
            for exps, coeff in eq:
                if len(exps) != nv:
                    raise ValidationError(
                        f"exponent vector {exps} needs {nv} entries"
                    )
                if any(x < 0 for x in exps):
                    raise ValidationError("exponents must be nonnegative")
                if coeff % self.p != 0:
                    degrees.add(sum(exps))
            if self.ambient_kind == "projective" and len(degrees) > 1:
                raise ValidationError("projective equations must be homogeneous")

    @property
    def num_vars(self) -> int:
        return self.ambient_dim + (1 if self.ambient_kind == "projective" else 0)

    @property
    def base_field(self) -> FqField:
        return fq_make(self.p, self.e)

    @property
    def q(self) -> int:
        return self.p**self.e

    def to_json(self) -> dict:
        return {
            "ambient": {
                self.ambient_kind: self.ambient_dim,
            },
            "p": self.p,
            "e": self.e,
            "equations": [
                [[list(exps), coeff] for exps, coeff in eq] for eq in self.equations
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "VarietySpec":
        ambient = data["ambient"]
        if "projective" in ambient:
            kind, dim = "projective", ambient["projective"]
        elif "affine" in ambient:
            kind, dim = "affine", ambient["affine"]
        else:
            raise ValidationError("ambient must specify projective or affine")
        raw = data.get("equations", [])
        # accept either a list of equations (each a list of [exps, coeff]
        # terms) or a single flat equation as a list of terms
        if raw and raw[0] and isinstance(raw[0][1], int):
            raw = [raw]
        eqs = tuple(
            tuple((tuple(exps), int(coeff)) for exps, coeff in eq) for eq in raw
        )
        return VarietySpec(kind, dim, data["p"], data.get("e", 1), eqs)


def projective_space(n: int, p: int, e: int = 1) -> VarietySpec:
    return VarietySpec("projective", n, p, e, ())


def affine_space(n: int, p: int, e: int = 1) -> VarietySpec:
    return VarietySpec("affine", n, p, e, ())


# --- charts ---


def _charts(v: VarietySpec):
    """Yield (fixed, free_indices): fixed maps var index -> 0 or 1."""
    nv = v.num_vars
    if v.ambient_kind == "affine":
        yield {}, list(range(nv))
        return
    for i in range(nv):
        fixed = {j: 0 for j in range(i)}
        fixed[i] = 1
        yield fixed, list(range(i + 1, nv))


def _specialize(eq, fixed: dict, free: list[int], p: int):
    """Restrict an equation to a chart; returns terms over the free
    variables as {reduced exponent vector: coeff mod p} or None when the
    equation is identically zero on the chart."""
    acc: dict[tuple[int, ...], int] = {}
    for exps, coeff in eq:
        c = coeff % p
        if c == 0:
            continue
        if any(exps[j] > 0 and fixed[j] == 0 for j in fixed):
            continue  # a zeroed variable kills the term
        key = tuple(exps[j] for j in free)
        acc[key] = (acc.get(key, 0) + c) % p
    acc = {k: c for k, c in acc.items() if c != 0}
    return acc if acc else None


# --- squares tables and quadratic solving ---


@lru_cache(maxsize=32)
def _nonzero_squares(p: int, e: int) -> frozenset:
    field = fq_make(p, e)
    out = set()
    for y in field.enumerate():
        if not y.is_zero():
            out.add((y * y).to_int())
    return frozenset(out)


def _abs_trace_char2(x: FqElement) -> int:
    """Absolute trace F_{2^k} -> F_2."""
    acc = x.field.zero()
    t = x
    for _ in range(x.field.e):
        acc = acc + t
        t = t * t
    return 0 if acc.is_zero() else 1


def _univariate_root_count(field: FqField, coeffs: list[FqElement]) -> int:
    """Roots in F_q of a polynomial of degree <= 2 given ascending coeffs
    [c, b, a]."""
    c = coeffs[0] if len(coeffs) > 0 else field.zero()
    b = coeffs[1] if len(coeffs) > 1 else field.zero()
    a = coeffs[2] if len(coeffs) > 2 else field.zero()
    if a.is_zero():
        if b.is_zero():
            return field.q if c.is_zero() else 0
        return 1
    if field.p == 2:
        if b.is_zero():
            return 1  # squaring is a bijection
        # v = (b/a) w turns a v^2 + b v + c into w^2 + w = a c / b^2
        rhs = a * c / (b * b)
        return 2 if _abs_trace_char2(rhs) == 0 else 0
    disc = b * b - field.element(4) * a * c
    if disc.is_zero():
        return 1
    return 2 if disc.to_int() in _nonzero_squares(field.p, field.e) else 0


def _pick_quadratic_var(terms: dict, f: int) -> int | None:
    """Index of a free variable the equation is degree 1-2 in, or None."""
    for j in range(f):
        degs = {exps[j] for exps in terms}
        if max(degs) in (1, 2):
            return j
    return None


def _eval_terms(field: FqField, terms, point) -> FqElement:
    acc = field.zero()
    for exps, coeff in terms:
        val = field.element(coeff)
        for x, ee in zip(point, exps):
            if ee:
                val = val * (x**ee)
        acc = acc + val
    return acc


def _chart_count(field: FqField, eqs, f: int, tracker: BudgetTracker) -> int:
    """Count solutions in F_q^f of the specialized equations."""
    q = field.q
    if eqs is None:  # a constant-nonzero equation: empty chart
        return 0
    if not eqs:
        return q**f
    if len(eqs) == 1 and f >= 1:
        terms = eqs[0]
        j = _pick_quadratic_var(terms, f)
        if j is not None:
            tracker.charge(q ** (f - 1))
            if f == 2 and q > PYTHON_ENUM_LIMIT and field.p != 2:
                return _solve_chart_vec(field, terms, j)
            return _solve_chart(field, terms, f, j)
    tracker.charge(q**f)
    if f == 1 and q > PYTHON_ENUM_LIMIT:
        return _enum_chart_vec(field, eqs)
    eq_lists = [list(eq.items()) for eq in eqs]
    count = 0
    for point in itertools.product(field.enumerate(), repeat=f):
        if all(_eval_terms(field, eq, point).is_zero() for eq in eq_lists):
            count += 1
    return count


def _pack_digits(vf, digits):
    import numpy as np

    powers = vf.p ** np.arange(vf.k, dtype=np.int64)
    return digits.astype(np.int64) @ powers


@lru_cache(maxsize=16)
def _squares_mask(p: int, e: int):
    """Boolean table over packed element integers: True iff a nonzero
    square in F_{p^e}."""
    import numpy as np

    from .gfvec import VecField

    field = fq_make(p, e)
    vf = VecField(field)
    mask = np.zeros(field.q, dtype=bool)
    for start in range(0, field.q, VEC_CHUNK):
        y = vf.digits_of_range(start, min(start + VEC_CHUNK, field.q))
        mask[_pack_digits(vf, vf.mul(y, y))] = True
    mask[0] = False
    return mask


def _solve_chart_vec(field: FqField, terms: dict, j: int) -> int:
    """Vectorized two-variable chart with one equation quadratic in
    variable j (odd characteristic): enumerate the other variable and
    count roots through the discriminant."""
    import numpy as np

    from .gfvec import VecField

    vf = VecField(field)
    sqmask = _squares_mask(field.p, field.e)
    four = vf.from_element(field.element(4))
    other = 1 - j
    term_list = [
        (exps[j], exps[other], field.element(coeff)) for exps, coeff in terms.items()
    ]
    one = field.one()
    total = 0
    for start in range(0, field.q, VEC_CHUNK):
        w = vf.digits_of_range(start, min(start + VEC_CHUNK, field.q))
        n = w.shape[0]
        pows = {1: w}  # reuse powers of w across terms
        coeffs = [vf.zeros(n), vf.zeros(n), vf.zeros(n)]
        for dj, ew, celt in term_list:
            if ew:
                if ew not in pows:
                    half = pows.setdefault(ew // 2, vf.power(w, ew // 2))
                    rest = pows.setdefault(ew - ew // 2, vf.power(w, ew - ew // 2))
                    pows[ew] = vf.mul(half, rest)
                val = pows[ew]
                if celt != one:
                    val = vf.mul(vf.from_element(celt), val)
            else:
                val = vf.from_element(celt)
            coeffs[dj] = ((coeffs[dj] + val) % vf.p).astype(np.int16)
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = ((vf.mul(b, b).astype(np.int64) - vf.mul(four, vf.mul(a, c))) % vf.p).astype(np.int16)
        a0 = vf.is_zero(a)
        b0 = vf.is_zero(b)
        c0 = vf.is_zero(c)
        d0 = vf.is_zero(disc)
        issq = sqmask[_pack_digits(vf, disc)]
        counts = np.where(
            ~a0,
            np.where(d0, 1, np.where(issq, 2, 0)),
            np.where(~b0, 1, np.where(c0, field.q, 0)),
        )
        total += int(counts.sum())
    return total


def _enum_chart_vec(field: FqField, eqs) -> int:
    """Vectorized one-free-variable chart: evaluate every equation on all
    field elements."""
    import numpy as np

    from .gfvec import VecField

    vf = VecField(field)
    total = 0
    for start in range(0, field.q, VEC_CHUNK):
        x = vf.digits_of_range(start, min(start + VEC_CHUNK, field.q))
        mask = np.ones(x.shape[0], dtype=bool)
        for eq in eqs:
            val = _eval_terms_vec(vf, field, eq, [x])
            mask &= vf.is_zero(val)
        total += int(np.count_nonzero(mask))
    return total


def _solve_chart(field: FqField, terms: dict, f: int, j: int) -> int:
    """One equation, degree <= 2 in free variable j: enumerate the rest."""
    others = [i for i in range(f) if i != j]
    term_list = [
        (exps[j], tuple(exps[i] for i in others), field.element(coeff))
        for exps, coeff in terms.items()
    ]
    count = 0
    for point in itertools.product(field.enumerate(), repeat=len(others)):
        coeffs = [field.zero(), field.zero(), field.zero()]
        for dj, rest, cval in term_list:
            val = cval
            for x, ee in zip(point, rest):
                if ee:
                    val = val * (x**ee)
            coeffs[dj] = coeffs[dj] + val
        count += _univariate_root_count(field, coeffs)
    return count


def count_points(v: VarietySpec, n: int, budget: int | None = None, threads: int = 1) -> int:
    """#X(F_{q^n}) by chart-wise enumeration of normalized representatives."""
    if n < 1:
        raise PreconditionError("extension degree must be >= 1")
    field = fq_make(v.p, v.e * n)
    tracker = BudgetTracker(resolve_budget(budget))
    total = 0
    for fixed, free in _charts(v):
        specialized = []
        empty_chart = False
        for eq in v.equations:
            s = _specialize(eq, fixed, free, v.p)
            if s is None:
                continue
            if len(s) == 1 and next(iter(s)) == (0,) * len(free):
                empty_chart = True  # nonzero constant equation
                break
            specialized.append(s)
        if empty_chart:
            continue
        total += _chart_count(field, specialized, len(free), tracker)
    return total


def enumerate_points(v: VarietySpec, n: int = 1, budget: int | None = None):
    """Normalized point representatives over F_{q^n} (desk scale only)."""
    field = fq_make(v.p, v.e * n)
    tracker = BudgetTracker(resolve_budget(budget))
    points = []
    for fixed, free in _charts(v):
        specialized = []
        empty_chart = False
        for eq in v.equations:
            s = _specialize(eq, fixed, free, v.p)
            if s is None:
                continue
            if len(s) == 1 and next(iter(s)) == (0,) * len(free):
                empty_chart = True
                break
            specialized.append(s)
        if empty_chart:
            continue
        tracker.charge(field.q ** len(free))
        eq_lists = [list(eq.items()) for eq in specialized]
        for assign in itertools.product(field.enumerate(), repeat=len(free)):
            if all(_eval_terms(field, eq, assign).is_zero() for eq in eq_lists):
                coords = []
                it = iter(assign)
                for idx in range(v.num_vars):
                    if idx in fixed:
                        coords.append(field.element(fixed[idx]))
                    else:
                        coords.append(next(it))
                points.append(tuple(coords))
    return points


# --- group elements and twisted counts ---


def _normalize_matrix(v: VarietySpec, g) -> tuple[tuple[FqElement, ...], ...]:
    base = v.base_field
    rows = []
    for row in g:
        cells = []
        for entry in row:
            if isinstance(entry, FqElement):
                if entry.field != base:
                    raise ValidationError("matrix entries must lie in the base field")
                cells.append(entry)
            else:
                cells.append(base.element(entry))
        rows.append(tuple(cells))
    m = tuple(rows)
    nv = v.num_vars
    if len(m) != nv or any(len(r) != nv for r in m):
        raise ValidationError(f"group elements must be {nv}x{nv} matrices")
    return m


def matrix_order(v: VarietySpec, g, limit: int = 10_000) -> int:
    m = _normalize_matrix(v, g)
    base = v.base_field
    nv = v.num_vars
    ident = tuple(
        tuple(base.one() if i == j else base.zero() for j in range(nv))
        for i in range(nv)
    )
    acc = m
    for r in range(1, limit + 1):
        if acc == ident:
            return r
        acc = _mat_mul(acc, m)
    raise ValidationError("matrix has no finite order within the search limit")


def _mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), a[0][0].field.zero())
            for j in range(n)
        )
        for i in range(n)
    )


def _apply_matrix(m, coords):
    n = len(m)
    zero = coords[0].field.zero()
    embedded = m  # entries already embedded by caller
    return tuple(
        sum((embedded[i][j] * coords[j] for j in range(n)), zero) for i in range(n)
    )


def _proj_equal(v: VarietySpec, a, b) -> bool:
    if v.ambient_kind == "affine":
        return a == b
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


def twisted_count(
    v: VarietySpec, g, n: int, budget: int | None = None, threads: int = 1
) -> int:
    """#{x in X(F-bar) : g(Fr^n(x)) = x}; all such x lie in
    X(F_{q^{n ord(g)}})."""
    return _twisted_core(v, g, n, (), budget)


def _twisted_core(
    v: VarietySpec, g, n: int, fixers: tuple, budget: int | None
) -> int:
    if n < 1:
        raise PreconditionError("extension degree must be >= 1")
    act = _normalize_matrix(v, g)
    fix = tuple(_normalize_matrix(v, h) for h in fixers)
    r = matrix_order(v, act)
    big = fq_make(v.p, v.e * n * r)
    tracker = BudgetTracker(resolve_budget(budget))
    frob_exp = v.p ** (v.e * n)

    base = v.base_field
    act_big = tuple(tuple(base.embed(x, big) for x in row) for row in act)
    fix_big = [tuple(tuple(base.embed(x, big) for x in row) for row in h) for h in fix]

    total = 0
    for fixed, free in _charts(v):
        specialized = []
        empty_chart = False
        for eq in v.equations:
            s = _specialize(eq, fixed, free, v.p)
            if s is None:
                continue
            if len(s) == 1 and next(iter(s)) == (0,) * len(free):
                empty_chart = True
                break
            specialized.append(s)
        if empty_chart:
            continue
        f = len(free)
        work = big.q**f
        tracker.charge(max(work, 1))
        if f == 1 and big.q > PYTHON_ENUM_LIMIT:
            total += _twisted_chart_vec(
                v, big, fixed, free, specialized, act_big, fix_big, frob_exp
            )
        else:
            total += _twisted_chart_py(
                v, big, fixed, free, specialized, act_big, fix_big, frob_exp
            )
    return total


def _twisted_chart_py(v, big, fixed, free, eqs, act, fix, frob_exp):
    eq_lists = [list(eq.items()) for eq in eqs]
    count = 0
    for assign in itertools.product(big.enumerate(), repeat=len(free)):
        if not all(_eval_terms(big, eq, assign).is_zero() for eq in eq_lists):
            continue
        coords = []
        it = iter(assign)
        for idx in range(v.num_vars):
            if idx in fixed:
                coords.append(big.element(fixed[idx]))
            else:
                coords.append(next(it))
        coords = tuple(coords)
        if any(not _proj_equal(v, _apply_matrix(h, coords), coords) for h in fix):
            continue
        shifted = tuple(c**frob_exp for c in coords)
        if _proj_equal(v, _apply_matrix(act, shifted), coords):
            count += 1
    return count


def _twisted_chart_vec(v, big, fixed, free, eqs, act, fix, frob_exp):
    import numpy as np

    from .gfvec import VecField

    vf = VecField(big)
    nv = v.num_vars
    var_idx = free[0]
    # exponent of p for the Frobenius digit matrix
    m_exp = 0
    fe = frob_exp
    while fe > 1:
        fe //= v.p
        m_exp += 1
    frob_m = vf.frobenius_matrix(m_exp)
    act_mats = [[vf.const_mul_matrix(act[i][j]) for j in range(nv)] for i in range(nv)]
    fix_mats = [
        [[vf.const_mul_matrix(h[i][j]) for j in range(nv)] for i in range(nv)]
        for h in fix
    ]

    const_digits = {}
    for idx, val in fixed.items():
        const_digits[idx] = vf.from_element(big.element(val))

    def coord_arrays(x):
        return [const_digits[i] if i in fixed else x for i in range(nv)]

    def apply_mat(mats, coords):
        out = []
        for i in range(nv):
            acc = None
            for j in range(nv):
                term = vf.linear_map(coords[j], mats[i][j])
                acc = term if acc is None else (acc + term) % vf.p
            out.append(acc.astype(np.int16))
        return out

    def proj_equal_mask(a, b):
        mask = None
        if v.ambient_kind == "affine":
            for i in range(nv):
                mm = vf.equal(
                    np.broadcast_to(a[i], _shape(a, b, vf)),
                    np.broadcast_to(b[i], _shape(a, b, vf)),
                )
                mask = mm if mask is None else (mask & mm)
            return mask
        for i in range(nv):
            for j in range(i + 1, nv):
                lhs = vf.mul(a[i], b[j])
                rhs = vf.mul(a[j], b[i])
                mm = vf.equal(lhs, rhs)
                mask = mm if mask is None else (mask & mm)
        return mask

    count = 0
    chunk = 1 << 18
    for start in range(0, big.q, chunk):
        stop = min(start + chunk, big.q)
        x = vf.digits_of_range(start, stop)
        coords = coord_arrays(x)
        mask = np.ones(stop - start, dtype=bool)
        for eq in eqs:
            val = _eval_terms_vec(vf, big, eq, coords)
            mask &= vf.is_zero(val)
        for h in fix_mats:
            hy = apply_mat(h, coords)
            mask &= proj_equal_mask(hy, coords)
        shifted = [vf.linear_map(c, frob_m) for c in coords]
        moved = apply_mat(act_mats, shifted)
        mask &= proj_equal_mask(moved, coords)
        count += int(np.count_nonzero(mask))
    return count


def _shape(a, b, vf):
    n = max(max(x.shape[0] for x in a), max(x.shape[0] for x in b))
    return (n, vf.k)


def _eval_terms_vec(vf, big, terms, coords):
    import numpy as np

    one = big.one()
    pows = {}  # (position, exponent) -> power array, shared across terms
    acc = None
    for exps, coeff in terms.items():
        celt = big.element(coeff)
        val = None if celt == one else vf.from_element(celt)
        for pos, ee in enumerate(exps):
            if ee:
                key = (pos, ee)
                if key not in pows:
                    pows[key] = vf.power(coords[pos], ee)
                val = pows[key] if val is None else vf.mul(val, pows[key])
        if val is None:
            val = vf.from_element(celt)
        acc = val if acc is None else (acc + val) % vf.p
    return acc.astype(np.int16)


def zeta_from_counts(
    v: VarietySpec, n_max: int, budget: int | None = None
) -> WittElement:
    """exp(sum #X(F_{q^n}) t^n / n) truncated at t^{n_max}."""
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    counts = [count_points(v, n, budget) for n in range(1, n_max + 1)]
    return WittElement(exp_from_traces(counts))


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    mu, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def closed_points(v: VarietySpec, d_max: int, budget: int | None = None) -> list[int]:
    """B_d = (1/d) sum_{e|d} mu(d/e) #X(F_{q^e}) for d = 1..d_max."""
    if d_max < 1:
        raise PreconditionError("d_max must be >= 1")
    counts = {n: count_points(v, n, budget) for n in range(1, d_max + 1)}
    out = []
    for d in range(1, d_max + 1):
        acc = sum(_mobius(d // e) * counts[e] for e in range(1, d + 1) if d % e == 0)
        if acc % d != 0 or acc < 0:
            raise ValidationError(f"closed-point count B_{d} = {acc}/{d} is not valid")
        out.append(acc // d)
    return out


def euler_product_series(b_counts: Sequence[int], precision: int) -> TruncatedSeries:
    """prod_d (1 - t^d)^{-B_d} truncated at t^precision."""
    result = TruncatedSeries.one(precision)
    for d, b in enumerate(b_counts, start=1):
        if d > precision:
            break
        # (1 - t^d)^{-b} = sum_k C(b+k-1, k) t^{dk}
        coeffs = [Fraction(0)] * (precision + 1)
        for k in range(0, precision // d + 1):
            coeffs[d * k] = Fraction(math.comb(b + k - 1, k))
        result = result * TruncatedSeries(coeffs)
    return result


@dataclass
class WeilReport:
    stabilized: bool
    zeta: RationalFunction | None
    e_degree: int | None
    functional_equation_holds: bool
    sign: int | None
    rh_holds: bool
    reciprocal_root_moduli: list[float]
    profile: list[int]
    counts: list[int]
    smooth_proper_assumed: bool = True
    note: str | None = None

    def to_json(self) -> dict:
        out = {
            "stabilized": self.stabilized,
            "functional_equation_holds": self.functional_equation_holds,
            "rh_holds": self.rh_holds,
            "reciprocal_root_moduli": self.reciprocal_root_moduli,
            "profile": self.profile,
            "counts": self.counts,
            "smooth_proper_assumed": self.smooth_proper_assumed,
        }
        if self.zeta is not None:
            out["zeta"] = self.zeta.to_json()
            out["e_degree"] = self.e_degree
            out["sign"] = self.sign
        if self.note:
            out["note"] = self.note
        return out


def _reciprocal_root_moduli(poly: Polynomial) -> list[float]:
    import numpy as np

    if poly.degree < 1:
        return []
    coeffs = [float(poly[i]) for i in range(poly.degree, -1, -1)]
    return [1.0 / abs(r) for r in np.roots(coeffs)]


def weil_check(
    v: VarietySpec, dim: int, n_max: int, budget: int | None = None
) -> WeilReport:
    """Reconstruct Z_X from counts and verify rationality, the functional
    equation Z(1/(q^dim t)) = +- t^E q^{dim E/2} Z(t), and the expected
    reciprocal-root magnitudes q^{i/2}."""
    from .reconstruct import linear_complexity_profile

    counts = [count_points(v, n, budget) for n in range(1, n_max + 1)]
    series = exp_from_traces(counts)
    profile = linear_complexity_profile(series.coeffs)
    rec = traces_to_zeta(counts)
    if isinstance(rec, NotStabilized):
        return WeilReport(
            stabilized=False,
            zeta=None,
            e_degree=None,
            functional_equation_holds=False,
            sign=None,
            rh_holds=False,
            reciprocal_root_moduli=[],
            profile=rec.profile,
            counts=counts,
            note=rec.reason,
        )
    zeta = rec.value
    e_deg = -zeta.degree
    q = v.q

    fe_holds = False
    sign = None
    note = None
    if (dim * e_deg) % 2 != 0:
        note = "dim*E odd: functional equation constant is irrational"
    else:
        lhs = zeta.substitute_reciprocal(scale=Fraction(q) ** dim)
        factor = Fraction(q) ** (dim * e_deg // 2)
        if e_deg >= 0:
            mono = RationalFunction(Polynomial([0] * e_deg + [factor]), Polynomial.one())
        else:
            mono = RationalFunction(Polynomial([factor]), Polynomial([0] * (-e_deg) + [1]))
        ratio = lhs / (mono * zeta)
        if ratio.den == Polynomial.one() and ratio.num == Polynomial.constant(1):
            fe_holds, sign = True, 1
        elif ratio.den == Polynomial.one() and ratio.num == Polynomial.constant(-1):
            fe_holds, sign = True, -1

    moduli = _reciprocal_root_moduli(zeta.num) + _reciprocal_root_moduli(zeta.den)
    grid = [q ** (i / 2.0) for i in range(0, 2 * dim + 1)]
    rh = all(any(abs(m - g) <= 1e-9 * (1 + g) for g in grid) for m in moduli)
    return WeilReport(
        stabilized=True,
        zeta=zeta,
        e_degree=e_deg,
        functional_equation_holds=fe_holds,
        sign=sign,
        rh_holds=rh,
        reciprocal_root_moduli=sorted(moduli),
        profile=profile,
        counts=counts,
        note=note,
    )


def artin_mazur_traces(p: int, m: int, n_max: int) -> list[int]:
    """Fixed points of the n-th iterate of x -> x^m on the projective line
    over an algebraic closure of F_p: 2 + (prime-to-p part of m^n - 1)."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime")
    if m < 2:
        raise ValidationError("power map exponent must be >= 2")
    if math.gcd(m, p) != 1:
        raise ValidationError("exponent must be coprime to the characteristic")
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    out = []
    for n in range(1, n_max + 1):
        val = m**n - 1
        while val % p == 0:
            val //= p
        out.append(2 + val)
    return out
