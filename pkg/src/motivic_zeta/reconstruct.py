"""Rationality testing and rational-function reconstruction over Q.

Berlekamp-Massey over exact rationals.  A reconstruction is accepted only
when the recurrence stopped changing over the final ceil(len/4) terms and
its order is at most floor(len/2); otherwise NotStabilized is returned
carrying the linear-complexity profile as evidence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import ValidationError
from .exact_core import Polynomial, RationalFunction, _frac
from .series import exp_from_traces


@dataclass
class ReconstructionResult:
    value: RationalFunction
    stabilized_at: int          # index of the last recurrence change
    residual_checked_to: int    # input length used for the residual check
    degree: int = 0             # deg(num) - deg(den) of the reduced value

    def __post_init__(self):
        self.degree = self.value.degree


@dataclass
class NotStabilized:
    profile: list[int] = field(default_factory=list)
    order: int = 0
    reason: str = ""


def _bm_core(seq: list[Fraction]):
    """Classic Berlekamp-Massey; returns (C, L, profile, last_change).

    C is the connection polynomial with C(0)=1 such that
    sum_j C_j * s_{i-j} = 0 for L <= i < len(seq).
    """
    c = [Fraction(1)]
    b = [Fraction(1)]
    L, m = 0, 1
    bb = Fraction(1)
    profile: list[int] = []
    last_change = -1
    for i, s in enumerate(seq):
        d = s
        for j in range(1, L + 1):
            if j < len(c):
                d += c[j] * seq[i - j]
        if d == 0:
            m += 1
        elif 2 * L <= i:
            t = c[:]
            coef = d / bb
            c = c + [Fraction(0)] * (len(b) + m - len(c))
            for j, bj in enumerate(b):
                c[j + m] -= coef * bj
            L = i + 1 - L
            b = t
            bb = d
            m = 1
            last_change = i
        else:
            coef = d / bb
            c = c + [Fraction(0)] * max(0, len(b) + m - len(c))
            for j, bj in enumerate(b):
                c[j + m] -= coef * bj
            m += 1
            last_change = i
        profile.append(L)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c, L, profile, last_change


def linear_complexity_profile(seq: Sequence) -> list[int]:
    """Minimal recurrence order after each prefix; monotone nondecreasing."""
    values = [_frac(s) for s in seq]
    if not values:
        return []
    return _bm_core(values)[2]


def berlekamp_massey(seq: Sequence) -> ReconstructionResult | NotStabilized:
    values = [_frac(s) for s in seq]
    if not values:
        raise ValidationError("berlekamp_massey needs a nonempty sequence")
    c, L, profile, last_change = _bm_core(values)
    n = len(values)
    window = -(-n // 4)  # ceil(n/4)
    if L > n // 2:
        return NotStabilized(profile, L, f"order {L} exceeds half the data length")
    if last_change >= n - window:
        return NotStabilized(
            profile, L, f"recurrence still changing in the final {window} terms"
        )
    den = Polynomial(c)
    # numerator = (series * C) truncated; must vanish in degrees L..n-1
    prod = [Fraction(0)] * n
    for i, s in enumerate(values):
        for j, cj in enumerate(c):
            if i + j < n:
                prod[i + j] += s * cj
    if any(prod[k] != 0 for k in range(L, n)):
        return NotStabilized(profile, L, "residual check failed")
    num = Polynomial(prod[:L] if L > 0 else prod[:1])
    value = RationalFunction(num, den)
    return ReconstructionResult(value, stabilized_at=last_change, residual_checked_to=n)


def traces_to_zeta(traces: Sequence) -> ReconstructionResult | NotStabilized:
    """exp(sum traces_n t^n / n) reconstructed as a rational function."""
    series = exp_from_traces([_frac(t) for t in traces])
    return berlekamp_massey(series.coeffs)
