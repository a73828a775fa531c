"""Graded-matrix endomorphism realizations: traces, zeta functions,
determinants, duals, functional equations, direct sums and tensors.

A motive realization is a pair of square rational matrices (F+, F-); the
categorical trace of the n-th iterate is the supertrace
tr(F+^n) - tr(F-^n), and the zeta function is
exp(sum_n tr_n t^n / n) = det(1 - t F-) / det(1 - t F+).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotInvertibleError, PreconditionError, ValidationError
from .exact_core import Polynomial, RatMatrix, RationalFunction, reversed_char_poly
from .series import DEFAULT_PRECISION, WittElement, exp_from_traces


@dataclass(frozen=True)
class TracedMotive:
    f_plus: RatMatrix
    f_minus: RatMatrix
    label: str | None = None

    def __post_init__(self):
        if not self.f_plus.is_square() or not self.f_minus.is_square():
            raise ValidationError("both graded blocks must be square")

    @property
    def d_plus(self) -> int:
        return self.f_plus.rows

    @property
    def d_minus(self) -> int:
        return self.f_minus.rows

    def euler_characteristic(self) -> int:
        """tr(id) = dim(+) - dim(-)."""
        return self.d_plus - self.d_minus

    def to_json(self) -> dict:
        out = {"f_plus": self.f_plus.to_json(), "f_minus": self.f_minus.to_json()}
        if self.label is not None:
            out["label"] = self.label
        return out

    @staticmethod
    def from_json(data: dict) -> "TracedMotive":
        return TracedMotive(
            RatMatrix.from_json(data.get("f_plus", [])),
            RatMatrix.from_json(data.get("f_minus", [])),
            data.get("label"),
        )

    @staticmethod
    def empty() -> "TracedMotive":
        return TracedMotive(RatMatrix.empty(), RatMatrix.empty())

    @staticmethod
    def unit() -> "TracedMotive":
        """Monoidal unit: identity on a (1|0)-dimensional space."""
        return TracedMotive(RatMatrix.identity(1), RatMatrix.empty())


@dataclass(frozen=True)
class TraceSequence:
    values: tuple[Fraction, ...]  # index n = 1..n_max

    def __getitem__(self, n: int) -> Fraction:
        if n < 1 or n > len(self.values):
            raise ValidationError(f"trace index {n} out of range")
        return self.values[n - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def trace_sequence(m: TracedMotive, n_max: int) -> TraceSequence:
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    out = []
    pp = RatMatrix.identity(m.d_plus)
    pm = RatMatrix.identity(m.d_minus)
    for _ in range(n_max):
        pp = pp * m.f_plus
        pm = pm * m.f_minus
        out.append(pp.trace() - pm.trace())
    return TraceSequence(tuple(out))


def zeta_series(m: TracedMotive, precision: int = DEFAULT_PRECISION) -> WittElement:
    if precision < 1:
        raise PreconditionError("precision must be >= 1")
    traces = trace_sequence(m, precision)
    return WittElement(exp_from_traces(list(traces)))


def zeta_rational(m: TracedMotive) -> RationalFunction:
    """det(1 - t F-) / det(1 - t F+), in lowest terms."""
    return RationalFunction(
        reversed_char_poly(m.f_minus), reversed_char_poly(m.f_plus)
    )


def zeta_degrees(m: TracedMotive) -> tuple[int, int]:
    """(uncancelled degree, reduced degree).

    The uncancelled degree is always -(d+ - d-) = -tr(id); the reduced
    degree can differ when F+ and F- share eigenvalues and the ratio
    cancels.
    """
    return -m.euler_characteristic(), zeta_rational(m).degree


def determinant(m: TracedMotive) -> Fraction:
    """det(F+) / det(F-); the graded determinant of the realization."""
    dp = m.f_plus.det()
    dm = m.f_minus.det()
    if dp == 0 or dm == 0:
        raise NotInvertibleError("determinant needs both blocks invertible")
    return dp / dm

def dual_inverse(m: TracedMotive) -> TracedMotive:
    """Realization of (f^{-1})^dual: inverse-transpose blockwise."""
    try:
        fp = m.f_plus.inverse().transpose()
        fm = m.f_minus.inverse().transpose()
    except NotInvertibleError:
        raise NotInvertibleError("dual_inverse needs both blocks invertible")
    label = None if m.label is None else f"dual_inverse({m.label})"
    return TracedMotive(fp, fm, label)


@dataclass
class FunctionalEquationReport:
    holds: bool
    trace_of_identity: int
    det_value: Fraction
    lhs: RationalFunction
    rhs: RationalFunction


def check_functional_equation(m: TracedMotive) -> FunctionalEquationReport:
    """Z((f^{-1})^dual; 1/t) = (-t)^{tr(id)} det(f) Z(f;t), exactly in Q(t)."""
    dual = dual_inverse(m)
    lhs = zeta_rational(dual).substitute_reciprocal()
    e = m.euler_characteristic()
    d = determinant(m)
    sign = Fraction(-1) ** abs(e)
    if e >= 0:
        monomial = RationalFunction(
            Polynomial([0] * e + [sign]), Polynomial.one()
        )
    else:
        monomial = RationalFunction(
            Polynomial([sign]), Polynomial([0] * (-e) + [1])
        )
    rhs = monomial * d * zeta_rational(m)
    return FunctionalEquationReport(
        holds=(lhs == rhs),
        trace_of_identity=e,
        det_value=d,
        lhs=lhs,
        rhs=rhs,
    )


def direct_sum(a: TracedMotive, b: TracedMotive) -> TracedMotive:
    return TracedMotive(
        RatMatrix.block_diag(a.f_plus, b.f_plus),
        RatMatrix.block_diag(a.f_minus, b.f_minus),
    )


def tensor(a: TracedMotive, b: TracedMotive) -> TracedMotive:
    """Graded tensor: even part (+ x +) + (- x -), odd part (+ x -) + (- x +)."""
    return TracedMotive(
        RatMatrix.block_diag(a.f_plus.kron(b.f_plus), a.f_minus.kron(b.f_minus)),
        RatMatrix.block_diag(a.f_plus.kron(b.f_minus), a.f_minus.kron(b.f_plus)),
    )


def cy_periodicity_check(traces: TraceSequence | Sequence, d: int, r: int) -> bool:
    """True iff (-1)^d * tr_n = tr_{n+r} for every testable n (1-indexed)."""
    values = list(traces)
    if r == 0:
        raise ValidationError("period r must be nonzero")
    if len(values) <= abs(r):
        raise PreconditionError("need more traces than |r|")
    sign = (-1) ** (d % 2)
    n_max = len(values)
    ok = True
    for n in range(1, n_max + 1):
        m = n + r
        if 1 <= m <= n_max:
            if sign * values[n - 1] != values[m - 1]:
                ok = False
                break
    return ok
