"""Truncated power series over Q and the big Witt ring W(Q).

A series tracks its truncation order N (coefficients 0..N are exact,
O(t^{N+1}) is unknown); binary operations truncate to the smaller N.
Witt elements are series with constant term 1.  Witt addition is the
plain series product; Witt multiplication goes through the ghost map
(pointwise product of ghost components), which is an isomorphism here
because the coefficients form a Q-algebra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import PrecisionError, PreconditionError, ValidationError
from .exact_core import Polynomial, RationalFunction, _frac, frac_to_str

DEFAULT_PRECISION = 16


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = tuple(_frac(c) for c in coeffs)
        if not cs:
            raise ValidationError("a truncated series needs at least coefficient 0")
        self.coeffs = cs

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def one(precision: int = DEFAULT_PRECISION) -> "TruncatedSeries":
        return TruncatedSeries([1] + [0] * precision)

    @staticmethod
    def zero(precision: int = DEFAULT_PRECISION) -> "TruncatedSeries":
        return TruncatedSeries([0] * (precision + 1))

    def __getitem__(self, i: int) -> Fraction:
        if i > self.precision:
            raise PrecisionError(f"coefficient {i} beyond precision {self.precision}")
        return self.coeffs[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise PrecisionError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: precision + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.precision, other.precision)
        return TruncatedSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs])
        n = min(self.precision, other.precision)
        out = []
        for k in range(n + 1):
            out.append(
                sum(
                    (self.coeffs[i] * other.coeffs[k - i] for i in range(k + 1)),
                    Fraction(0),
                )
            )
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "precision": self.precision,
            "coeffs": [frac_to_str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(data: dict) -> "TruncatedSeries":
        s = TruncatedSeries([_frac(c) for c in data["coeffs"]])
        if s.precision != data.get("precision", s.precision):
            raise ValidationError("precision field disagrees with coefficient count")
        return s

    @staticmethod
    def from_rational_function(
        rf: RationalFunction, precision: int = DEFAULT_PRECISION
    ) -> "TruncatedSeries":
        return TruncatedSeries(rf.taylor(precision))

    @staticmethod
    def from_polynomial(p: Polynomial, precision: int = DEFAULT_PRECISION) -> "TruncatedSeries":
        return TruncatedSeries([p[i] for i in range(precision + 1)])

    def __repr__(self):
        return f"TruncatedSeries({[frac_to_str(c) for c in self.coeffs]})"


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for s with zero constant term, to the same precision."""
    if s.coeffs[0] != 0:
        raise PreconditionError("series_exp requires zero constant term")
    n = s.precision
    out = [Fraction(1)]
    for k in range(1, n + 1):
        # k * b_k = sum_{j=1..k} j * a_j * b_{k-j}
        acc = sum((j * s.coeffs[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(acc / k)
    return TruncatedSeries(out)


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """log(s) for s with constant term 1, to the same precision."""
    if s.coeffs[0] != 1:
        raise PreconditionError("series_log requires constant term 1")
    n = s.precision
    out = [Fraction(0)]
    for k in range(1, n + 1):
        acc = sum((j * out[j] * s.coeffs[k - j] for j in range(1, k)), Fraction(0))
        out.append(s.coeffs[k] - acc / k)
    return TruncatedSeries(out)


def exp_from_traces(traces: Sequence) -> TruncatedSeries:
    """exp(sum_n a_n t^n / n) at precision len(traces), from a_1, a_2, ..."""
    a = [Fraction(0)] + [_frac(t) for t in traces]
    n = len(traces)
    out = [Fraction(1)]
    for k in range(1, n + 1):
        acc = sum((a[j] * out[k - j] for j in range(1, k + 1)), Fraction(0))
        out.append(acc / k)
    return TruncatedSeries(out)


class WittElement:
    """Element of W(Q) = (1 + t Q[[t]], x, *), truncated."""

    __slots__ = ("series",)

    def __init__(self, series: TruncatedSeries):
        if series.coeffs[0] != 1:
            raise ValidationError("Witt elements have constant term 1")
        self.series = series

    @property
    def precision(self) -> int:
        return self.series.precision

    @staticmethod
    def one_geometric(precision: int = DEFAULT_PRECISION) -> "WittElement":
        """1/(1-t): the multiplicative unit for *."""
        return WittElement(TruncatedSeries([1] * (precision + 1)))

    @staticmethod
    def zero(precision: int = DEFAULT_PRECISION) -> "WittElement":
        """The constant series 1: the additive zero of W(Q)."""
        return WittElement(TruncatedSeries.one(precision))

    def __eq__(self, other) -> bool:
        return isinstance(other, WittElement) and self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def to_json(self) -> dict:
        return self.series.to_json()

    @staticmethod
    def from_json(data: dict) -> "WittElement":
        return WittElement(TruncatedSeries.from_json(data))

    def __repr__(self):
        return f"WittElement({self.series!r})"


def witt_add(a: WittElement, b: WittElement) -> WittElement:
    return WittElement(a.series * b.series)


def ghost_components(a: WittElement, n_max: int) -> list[Fraction]:
    """gh_n for n = 1..n_max; gh_n = n * [t^n] log(a)."""
    if n_max > a.precision:
        raise PrecisionError(
            f"ghost components to {n_max} need precision >= {n_max}, have {a.precision}"
        )
    lg = series_log(a.series)
    return [n * lg.coeffs[n] for n in range(1, n_max + 1)]


def ghost_to_witt(ghosts: Sequence, precision: int | None = None) -> WittElement:
    """Inverse of ghost_components: the Witt element with the given ghosts."""
    gh = [_frac(g) for g in ghosts]
    n = len(gh) if precision is None else precision
    if n > len(gh):
        raise PrecisionError("not enough ghost components for requested precision")
    log_coeffs = [Fraction(0)] + [gh[k - 1] / k for k in range(1, n + 1)]
    return WittElement(series_exp(TruncatedSeries(log_coeffs)))


def witt_mul(a: WittElement, b: WittElement) -> WittElement:
    n = min(a.precision, b.precision)
    ga = ghost_components(a, n)
    gb = ghost_components(b, n)
    return ghost_to_witt([x * y for x, y in zip(ga, gb)], n)
