"""Motivic measures on a polynomial-count model of the Grothendieck ring
of varieties.

A class is represented by its counting polynomial P (P(q) = number of
points over a q-element field) plus a provenance tree recording how it
was built from cells.  Three measures:

* mu_count(q): evaluation at a prime power q (point counting),
* mu_rig: evaluation at 1 (Euler characteristic of compactly supported
  cohomology, exact on the polynomial-count span),
* mu_nc_composite: values in Z[eps]/(eps^2 - 1); on the even-cell span the
  value is (P(1), 0), and collapsing eps -> -1 recovers mu_rig.

non_factoring_witness exhibits two classes with equal mu_nc_composite but
different point counts, so point counting cannot factor through mu_nc.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError, ValidationError
from .exact_core import Polynomial


@dataclass(frozen=True)
class EpsInt:
    """Element a + b*eps of Z[eps]/(eps^2 - 1)."""

    a: int
    b: int = 0

    def __add__(self, other: "EpsInt") -> "EpsInt":
        return EpsInt(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "EpsInt":
        return EpsInt(-self.a, -self.b)

    def __sub__(self, other: "EpsInt") -> "EpsInt":
        return self + (-other)

    def __mul__(self, other: "EpsInt") -> "EpsInt":
        # (a + b eps)(c + d eps) = (ac + bd) + (ad + bc) eps
        return EpsInt(
            self.a * other.a + self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def collapse(self) -> int:
        """The ring map eps -> -1 down to Z."""
        return self.a - self.b

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    def __repr__(self):
        return f"EpsInt({self.a}, {self.b})"


def is_prime_power(q: int) -> bool:
    from .gf import is_prime

    if q < 2:
        return False
    for p in range(2, q + 1):
        if p * p > q:
            return is_prime(q)
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


@dataclass(frozen=True)
class MeasureClass:
    """A class in the polynomial-count Grothendieck ring model.

    `provenance` is the construction tree; `scissor_steps` records each
    decomposition [X] = [Z] + [X - Z] used along the way as
    (whole, part, part) triples of counting polynomials.
    `in_cell_span` is True while the class stays inside the span of
    points, affine/projective spaces, and their sums and products.
    """

    poly: Polynomial
    provenance: dict = field(default_factory=dict)
    scissor_steps: tuple = ()
    in_cell_span: bool = True

    def __post_init__(self):
        for i in range(self.poly.degree + 1):
            if self.poly[i].denominator != 1:
                raise ValidationError("counting polynomials have integer coefficients")

    def __add__(self, other: "MeasureClass") -> "MeasureClass":
        return MeasureClass(
            self.poly + other.poly,
            {"op": "sum", "args": [self.provenance, other.provenance]},
            self.scissor_steps + other.scissor_steps,
            self.in_cell_span and other.in_cell_span,
        )

    def __mul__(self, other: "MeasureClass") -> "MeasureClass":
        return MeasureClass(
            self.poly * other.poly,
            {"op": "product", "args": [self.provenance, other.provenance]},
            self.scissor_steps + other.scissor_steps,
            self.in_cell_span and other.in_cell_span,
        )

    def __sub__(self, other: "MeasureClass") -> "MeasureClass":
        # a formal difference [X] - [Z]; records the scissor step
        # [X] = [Z] + [X - Z] and leaves the even-cell span
        diff = self.poly - other.poly
        return MeasureClass(
            diff,
            {"op": "difference", "args": [self.provenance, other.provenance]},
            self.scissor_steps
            + other.scissor_steps
            + ((self.poly, other.poly, diff),),
            False,
        )

    def scale(self, n: int) -> "MeasureClass":
        """n disjoint copies."""
        if n < 0:
            raise ValidationError("cannot take a negative number of copies")
        return MeasureClass(
            self.poly * Polynomial([n]),
            {"op": "scale", "n": n, "args": [self.provenance]},
            self.scissor_steps,
            self.in_cell_span,
        )

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "provenance": self.provenance,
            "in_cell_span": self.in_cell_span,
        }


def point() -> MeasureClass:
    return MeasureClass(Polynomial.one(), {"op": "point"})


def affine_space(n: int) -> MeasureClass:
    if n < 0:
        raise ValidationError("dimension must be >= 0")
    return MeasureClass(Polynomial([0] * n + [1]), {"op": "affine_space", "n": n})


def projective_space(n: int) -> MeasureClass:
    """P^n = A^n + P^{n-1}; every step of the cell decomposition is
    recorded as a scissor relation."""
    if n < 0:
        raise ValidationError("dimension must be >= 0")
    steps = []
    for k in range(1, n + 1):
        whole = Polynomial([1] * (k + 1))
        cell = Polynomial([0] * k + [1])
        rest = Polynomial([1] * k)
        steps.append((whole, cell, rest))
    return MeasureClass(
        Polynomial([1] * (n + 1)), {"op": "projective_space", "n": n}, tuple(steps)
    )


def torus() -> MeasureClass:
    """G_m = A^1 - point, counting polynomial q - 1."""
    return MeasureClass(
        Polynomial([-1, 1]),
        {"op": "torus"},
        ((Polynomial([0, 1]), Polynomial.one(), Polynomial([-1, 1])),),
        False,
    )


def mu_count(cls: MeasureClass, q: int) -> int:
    """Point count over F_q; q must be a prime power."""
    if not is_prime_power(q):
        raise ValidationError(f"{q} is not a prime power")
    return int(cls.poly.evaluate(Fraction(q)))


def mu_rig(cls: MeasureClass) -> int:
    """Euler characteristic: the counting polynomial at q = 1."""
    return int(cls.poly.evaluate(Fraction(1)))


def mu_nc_composite(cls: MeasureClass) -> EpsInt:
    """Value in Z[eps]/(eps^2 - 1).

    On the even-cell span all cohomology sits in even degree, so the value
    is (P(1), 0); classes outside the span are extended by linearity
    (the in_cell_span flag on the class marks the extension).
    """
    return EpsInt(mu_rig(cls), 0)


def scissor_consistent(cls: MeasureClass, sample_qs=(2, 3, 5, 7, 9)) -> bool:
    """Every recorded scissor step [X] = [Z] + [X - Z] holds at the
    sampled prime powers."""
    for whole, part_a, part_b in cls.scissor_steps:
        for q in sample_qs:
            qq = Fraction(q)
            if whole.evaluate(qq) != part_a.evaluate(qq) + part_b.evaluate(qq):
                return False
    return True


@dataclass
class WitnessReport:
    """P^n versus n+1 disjoint points across the measures."""

    n: int
    q: int
    mu_nc_projective: EpsInt
    mu_nc_points: EpsInt
    nc_values_agree: bool
    mu_count_projective: int
    mu_count_points: int
    count_values_agree: bool
    note: str | None = None

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "mu_nc_projective": self.mu_nc_projective.to_json(),
            "mu_nc_points": self.mu_nc_points.to_json(),
            "nc_values_agree": self.nc_values_agree,
            "mu_count_projective": self.mu_count_projective,
            "mu_count_points": self.mu_count_points,
            "count_values_agree": self.count_values_agree,
        }
        if self.note:
            out["note"] = self.note
        return out


def non_factoring_witness(n: int, q: int) -> WitnessReport:
    """Certified obstruction: [P^n] and (n+1)[point] have equal
    mu_nc_composite values but different point counts over F_q, so point
    counting does not factor through mu_nc."""
    if n < 1:
        raise PreconditionError("need n >= 1 for a meaningful witness")
    if not is_prime_power(q):
        raise ValidationError(f"{q} is not a prime power")
    proj = projective_space(n)
    points = point().scale(n + 1)
    nc_p, nc_pts = mu_nc_composite(proj), mu_nc_composite(points)
    c_p, c_pts = mu_count(proj, q), mu_count(points, q)
    note = "n = 1 also witnesses for q > 1" if n == 1 else None
    return WitnessReport(
        n=n,
        q=q,
        mu_nc_projective=nc_p,
        mu_nc_points=nc_pts,
        nc_values_agree=(nc_p == nc_pts),
        mu_count_projective=c_p,
        mu_count_points=c_pts,
        count_values_agree=(c_p == c_pts),
        note=note,
    )
