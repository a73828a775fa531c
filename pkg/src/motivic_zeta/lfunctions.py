"""Non-abelian L-functions and orbifold zeta functions via fixed-point
counting.

A finite group acts on a variety through matrices over the base field.
L-series coefficients are averages (1/|G|) sum_g chi(g^{-1}) N_n(g) of
twisted point counts, with character values kept exact in a
cyclotomic-rational model (coordinates in Q[x]/(x^m - 1)).  The orbifold
zeta function is computed along two independent routes, a direct trace
formula summed over conjugacy classes and a product of centralizer
L-functions over fixed loci, and the two are asserted equal.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, ValidationError
from .exact_core import _frac, frac_to_str
from .gf import FqElement
from .series import TruncatedSeries, WittElement, exp_from_traces
from .varieties import (
    VarietySpec,
    _apply_matrix,
    _mat_mul,
    _normalize_matrix,
    _twisted_core,
    enumerate_points,
)


@dataclass(frozen=True)
class Cyclotomic:
    """Element of Q[x]/(x^m - 1), coordinates in the basis 1, x, ..,
    x^{m-1}; x plays the role of a primitive m-th root of unity."""

    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.m < 1 or len(self.coeffs) != self.m:
            raise ValidationError("cyclotomic element needs m coordinates")

    @staticmethod
    def rational(x, m: int = 1) -> "Cyclotomic":
        return Cyclotomic(m, (_frac(x),) + (Fraction(0),) * (m - 1))

    @staticmethod
    def root_of_unity(j: int, m: int) -> "Cyclotomic":
        coeffs = [Fraction(0)] * m
        coeffs[j % m] = Fraction(1)
        return Cyclotomic(m, tuple(coeffs))

    def _match(self, other: "Cyclotomic"):
        if self.m != other.m:
            raise ValidationError("cyclotomic orders differ")

    def __add__(self, other: "Cyclotomic") -> "Cyclotomic":
        self._match(other)
        return Cyclotomic(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.m, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "Cyclotomic") -> "Cyclotomic":
        return self + (-other)

    def __mul__(self, other) -> "Cyclotomic":
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.m, tuple(a * other for a in self.coeffs))
        self._match(other)
        out = [Fraction(0)] * self.m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[(i + j) % self.m] += a * b
        return Cyclotomic(self.m, tuple(out))

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValidationError("value is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        return sum(
            float(c) * cmath.exp(2j * cmath.pi * k / self.m)
            for k, c in enumerate(self.coeffs)
        )

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [frac_to_str(c) for c in self.coeffs]}


Matrix = tuple[tuple[FqElement, ...], ...]


class GroupAction:
    """A finite matrix group acting on a variety.

    Closure, the identity, and preservation of the variety (checked on all
    base-field points) are verified at construction.
    """

    def __init__(self, variety: VarietySpec, matrices: Sequence, budget: int | None = None):
        self.variety = variety
        elems = [_normalize_matrix(variety, g) for g in matrices]
        if len(set(elems)) != len(elems):
            raise ValidationError("duplicate group elements")
        index = {g: i for i, g in enumerate(elems)}
        self.elements: list[Matrix] = elems
        n = len(elems)
        table = [[0] * n for _ in range(n)]
        for i, a in enumerate(elems):
            for j, b in enumerate(elems):
                prod = _mat_mul(a, b)
                if prod not in index:
                    raise ValidationError("matrices are not closed under product")
                table[i][j] = index[prod]
        self.table = table
        ident = None
        for i in range(n):
            if all(table[i][j] == j and table[j][i] == j for j in range(n)):
                ident = i
                break
        if ident is None:
            raise ValidationError("no identity element found")
        self.identity_index = ident
        self.inverse = [next(j for j in range(n) if table[i][j] == ident) for i in range(n)]
        self.element_orders = [self._order(i) for i in range(n)]
        self._verify_preserves_variety(budget)
        self._build_classes()

    def __len__(self):
        return len(self.elements)

    def _order(self, i: int) -> int:
        j, r = i, 1
        while j != self.identity_index:
            j = self.table[j][i]
            r += 1
        return r

    def _verify_preserves_variety(self, budget):
        v = self.variety
        points = enumerate_points(v, 1, budget)
        base = v.base_field
        for g in self.elements:
            for x in points:
                y = _apply_matrix(g, x)
                for eq in v.equations:
                    acc = base.zero()
                    for exps, coeff in eq:
                        val = base.element(coeff)
                        for c, ee in zip(y, exps):
                            if ee:
                                val = val * (c**ee)
                        acc = acc + val
                    if not acc.is_zero():
                        raise ValidationError(
                            "a group element does not preserve the variety"
                        )

    def _build_classes(self):
        n = len(self.elements)
        seen = [False] * n
        self.class_reps: list[int] = []
        self.class_of = [0] * n
        for i in range(n):
            if seen[i]:
                continue
            rep = len(self.class_reps)
            orbit = {self.table[self.table[h][i]][self.inverse[h]] for h in range(n)}
            for j in orbit:
                seen[j] = True
                self.class_of[j] = rep
            self.class_reps.append(min(orbit))
        self.centralizers = [
            [h for h in range(n) if self.table[h][g] == self.table[g][h]]
            for g in self.class_reps
        ]

    def matrix(self, i: int) -> Matrix:
        return self.elements[i]


@dataclass(frozen=True)
class Character:
    """A class function on a group action, valued in Q[x]/(x^m - 1).

    values[k] is the value on the k-th conjugacy class.
    """

    m: int
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        for val in self.values:
            if val.m != self.m:
                raise ValidationError("character values must share the root order")

    def check_against(self, action: GroupAction):
        if len(self.values) != len(action.class_reps):
            raise ValidationError("one value per conjugacy class required")
        dim = self.values[action.class_of[action.identity_index]]
        if not dim.is_rational():
            raise ValidationError("chi(e) must be rational")
        d = dim.rational_value()
        if d.denominator != 1 or d <= 0:
            raise ValidationError("chi(e) must be a positive integer")

    def value_on_element(self, action: GroupAction, i: int) -> Cyclotomic:
        return self.values[action.class_of[i]]

    def to_json(self) -> dict:
        return {"m": self.m, "values": [v.to_json() for v in self.values]}


def trivial_character(action: GroupAction) -> Character:
    return Character(1, tuple(Cyclotomic.rational(1) for _ in action.class_reps))


def rational_character(action: GroupAction, values: Sequence) -> Character:
    return Character(1, tuple(Cyclotomic.rational(x) for x in values))


_twist_cache: dict = {}


def _cached_twist(v: VarietySpec, act: Matrix, fixers: tuple, n: int, budget) -> int:
    key = (v, act, fixers, n)
    if key not in _twist_cache:
        _twist_cache[key] = _twisted_core(v, act, n, fixers, budget)
    return _twist_cache[key]


@dataclass
class LSeries:
    """Truncated L-series with cyclotomic-rational coefficients."""

    m: int
    coeffs: tuple[Cyclotomic, ...]  # t^0 .. t^precision

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_truncated_series(self) -> TruncatedSeries:
        return TruncatedSeries([c.rational_value() for c in self.coeffs])

    def to_json(self) -> dict:
        if self.is_rational():
            return self.to_truncated_series().to_json()
        return {
            "m": self.m,
            "precision": self.precision,
            "coeffs": [c.to_json() for c in self.coeffs],
        }


def _exp_cyclotomic(traces: Sequence[Cyclotomic], m: int) -> list[Cyclotomic]:
    """exp(sum a_n t^n / n) with coefficients in Q[x]/(x^m - 1)."""
    n = len(traces)
    out = [Cyclotomic.rational(1, m)]
    a = [Cyclotomic.rational(0, m)] + list(traces)
    for k in range(1, n + 1):
        acc = Cyclotomic.rational(0, m)
        for j in range(1, k + 1):
            acc = acc + a[j] * out[k - j]
        out.append(acc * Fraction(1, k))
    return out


def l_function(
    v: VarietySpec,
    action: GroupAction,
    character: Character,
    n_max: int,
    budget: int | None = None,
) -> LSeries:
    """exp(sum_n (1/|G|) sum_g chi(g^{-1}) N_n(g) t^n / n) where N_n(g) is
    the twisted fixed-point count of g composed with Fr^n."""
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    character.check_against(action)
    m = character.m
    size = len(action)
    traces = []
    for n in range(1, n_max + 1):
        acc = Cyclotomic.rational(0, m)
        for i in range(size):
            chi = character.value_on_element(action, action.inverse[i])
            count = _cached_twist(v, action.elements[i], (), n, budget)
            acc = acc + chi * count
        traces.append(acc * Fraction(1, size))
    return LSeries(m, tuple(_exp_cyclotomic(traces, m)))


@dataclass
class OrbifoldReport:
    direct: WittElement
    product: WittElement
    routes_agree: bool
    traces: list[Fraction]

    def to_json(self) -> dict:
        return {
            "direct": self.direct.to_json(),
            "product": self.product.to_json(),
            "routes_agree": self.routes_agree,
            "traces": [frac_to_str(t) for t in self.traces],
        }


def orbifold_zeta(
    v: VarietySpec, action: GroupAction, n_max: int, budget: int | None = None
) -> OrbifoldReport:
    """Zeta function of the quotient orbifold, computed both as the
    exponential of the conjugacy-class trace formula and as the product of
    centralizer L-functions over the fixed loci; the two must agree."""
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    if len(action) % v.p == 0:
        raise ValidationError("group order must be invertible in the base field")

    class_term: list[list[Fraction]] = []
    for rep_idx, rep in enumerate(action.class_reps):
        g = action.elements[rep]
        cent = action.centralizers[rep_idx]
        per_n = []
        for n in range(1, n_max + 1):
            acc = 0
            for h in cent:
                acc += _cached_twist(v, action.elements[h], (g,), n, budget)
            per_n.append(Fraction(acc, len(cent)))
        class_term.append(per_n)

    traces = [sum(term[k] for term in class_term) for k in range(n_max)]
    direct = WittElement(exp_from_traces(traces))

    product = TruncatedSeries.one(n_max)
    for per_n in class_term:
        product = product * exp_from_traces(per_n)
    product_w = WittElement(product)

    return OrbifoldReport(
        direct=direct,
        product=product_w,
        routes_agree=(direct == product_w),
        traces=list(traces),
    )
