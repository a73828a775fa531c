"""Complex-analytic layer: eigenvalue spectra with certified residuals,
exponential growth rates, Hasse-Weil evaluation Z(f; q^{-s}), pole/zero
lattices, principal-branch logarithms, and the regularized-determinant
consistency check.

All float outputs are derived from the exact characteristic polynomials;
every eigenvalue is certified against its polynomial before use.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import (
    NotInvertibleError,
    NumericError,
    PoleError,
    PreconditionError,
)
from .exact_core import Polynomial, RatMatrix, char_poly
from .motives import TracedMotive, trace_sequence, zeta_rational

RESIDUAL_TOL = 1e-8
BRANCH_TOL = 1e-9


def _poly_roots_certified(p: Polynomial) -> list[complex]:
    """Roots of an exact polynomial, each certified to satisfy
    |p(root)| < 1e-8 (1+|root|)^deg; tiny imaginary parts are zeroed."""
    d = p.degree
    if d < 1:
        return []
    coeffs = [float(p[i]) for i in range(d, -1, -1)]
    roots = np.roots(coeffs)
    out = []
    for r in roots:
        lam = complex(r)
        if abs(lam.imag) <= 1e-9 * (1 + abs(lam)):
            lam = complex(lam.real, 0.0)
        residual = abs(p.evaluate(lam))
        if residual >= RESIDUAL_TOL * (1 + abs(lam)) ** d:
            raise NumericError(
                f"eigenvalue {lam} fails the residual certificate "
                f"({residual:.3e})"
            )
        out.append(lam)
    return out


@dataclass
class ComplexSpectrum:
    eigenvalues_plus: list[complex]
    eigenvalues_minus: list[complex]
    charpoly_plus: Polynomial
    charpoly_minus: Polynomial

    def to_json(self) -> dict:
        return {
            "eigenvalues_plus": [{"re": z.real, "im": z.imag} for z in self.eigenvalues_plus],
            "eigenvalues_minus": [{"re": z.real, "im": z.imag} for z in self.eigenvalues_minus],
            "charpoly_plus": self.charpoly_plus.to_json(),
            "charpoly_minus": self.charpoly_minus.to_json(),
        }


def spectrum(m: TracedMotive) -> ComplexSpectrum:
    cp = char_poly(m.f_plus)
    cm = char_poly(m.f_minus)
    return ComplexSpectrum(
        eigenvalues_plus=_poly_roots_certified(cp),
        eigenvalues_minus=_poly_roots_certified(cm),
        charpoly_plus=cp,
        charpoly_minus=cm,
    )


def spectral_radius(m: TracedMotive) -> tuple[float, float, float]:
    """(rho_plus, rho_minus, rho) with empty parts contributing 0."""
    spec = spectrum(m)
    rp = max((abs(z) for z in spec.eigenvalues_plus), default=0.0)
    rm = max((abs(z) for z in spec.eigenvalues_minus), default=0.0)
    return rp, rm, max(rp, rm)


def growth_bound_check(m: TracedMotive, n_max: int) -> bool:
    """|tr(f^n)| <= (d+ + d-) rho^n for n = 1..n_max, with float slack."""
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    _, _, rho = spectral_radius(m)
    dim = m.d_plus + m.d_minus
    traces = trace_sequence(m, n_max)
    for n in range(1, n_max + 1):
        bound = dim * rho**n
        if abs(float(traces[n])) > bound * (1 + 1e-9) + 1e-12:
            return False
    return True


NEG_INF = float("-inf")


def rate_estimate(traces: Sequence, n_max: int | None = None) -> float:
    """max over the tail window (last ceil(N/2) indices) of (1/n)log|tr_n|;
    zero traces are skipped; all-zero input gives -inf."""
    values = [Fraction(t) if not isinstance(t, Fraction) else t for t in traces]
    if n_max is not None:
        values = values[:n_max]
    n = len(values)
    if n == 0:
        raise PreconditionError("need at least one trace")
    window_start = n - (-(-n // 2))  # n - ceil(n/2)
    best = NEG_INF
    for idx in range(window_start, n):
        t = values[idx]
        if t == 0:
            continue
        best = max(best, math.log(abs(float(t))) / (idx + 1))
    return best


class Inapplicable:
    """Sentinel: the top-circle eigenvalue hypothesis fails, so the
    closed-form growth rate does not apply."""

    def __repr__(self):
        return "Inapplicable"

    def __eq__(self, other):
        return isinstance(other, Inapplicable)

    def __hash__(self):
        return hash("Inapplicable")


def _top_circle(eigen: list[complex], rho: float) -> list[complex]:
    return sorted(
        (z for z in eigen if abs(z) >= rho * (1 - 1e-6)),
        key=lambda z: (z.real, z.imag),
    )


def _multisets_match(a: list[complex], b: list[complex], tol: float) -> bool:
    if len(a) != len(b):
        return False
    remaining = list(b)
    for x in a:
        hit = None
        for i, y in enumerate(remaining):
            if abs(x - y) <= tol:
                hit = i
                break
        if hit is None:
            return False
        remaining.pop(hit)
    return True


def rate_exact(m: TracedMotive):
    """log rho when the top-circle eigenvalue multisets of the two graded
    parts differ (so no cancellation kills the leading term); otherwise
    Inapplicable."""
    spec = spectrum(m)
    rp = max((abs(z) for z in spec.eigenvalues_plus), default=0.0)
    rm = max((abs(z) for z in spec.eigenvalues_minus), default=0.0)
    rho = max(rp, rm)
    if rho == 0.0:
        return Inapplicable()
    top_p = _top_circle(spec.eigenvalues_plus, rho)
    top_m = _top_circle(spec.eigenvalues_minus, rho)
    if _multisets_match(top_p, top_m, 1e-6 * (1 + rho)):
        return Inapplicable()
    return math.log(rho)


# --- Hasse-Weil evaluation and pole/zero geometry ---


def _principal_log_q(lam: complex, q: int, boundary: str = "upper") -> complex:
    """log_q on the branch with Im(log lam) in ]-pi, pi]; boundary="lower"
    deliberately uses [-pi, pi[ instead (for sentinel testing)."""
    w = cmath.log(complex(lam.real, lam.imag))
    if boundary == "lower" and abs(w.imag - math.pi) <= 1e-12:
        w = complex(w.real, -math.pi)
    return w / math.log(q)


def hasse_weil_eval(m: TracedMotive, q: int, s: complex) -> complex:
    """Z(f; q^{-s}) evaluated as a complex number."""
    if q < 2:
        raise PreconditionError("q must be a prime power >= 2")
    z = zeta_rational(m)
    t0 = cmath.exp(-complex(s) * math.log(q))
    pole_roots = _poly_roots_certified(z.den)
    for root in pole_roots:
        if abs(t0 - root) <= 1e-9 * (1 + abs(t0)):
            nearest = -cmath.log(root) / math.log(q)
            raise PoleError(
                f"s = {s} hits a pole of the Hasse-Weil zeta function",
                nearest_pole=nearest,
            )
    num = complex(z.num.evaluate(t0))
    den = complex(z.den.evaluate(t0))
    return num / den


def convergence_abscissa(m: TracedMotive, q: int) -> float:
    """log rho / log q; -inf when the spectrum is empty or nilpotent."""
    if q < 2:
        raise PreconditionError("q must be a prime power >= 2")
    _, _, rho = spectral_radius(m)
    if rho == 0.0:
        return NEG_INF
    return math.log(rho) / math.log(q)


@dataclass
class MeromorphicReport:
    q: int
    lattice_step: float  # poles/zeros repeat along s -> s + i*lattice_step
    poles: list[dict]
    zeros: list[dict]
    cancellations: list[dict]
    values: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        def cpx(z):
            return {"re": z.real, "im": z.imag}

        def entry(e):
            return {
                "s": cpx(e["s"]),
                "eigenvalue": cpx(e["eigenvalue"]),
                "multiplicity": e["multiplicity"],
            }

        return {
            "q": self.q,
            "lattice_step": self.lattice_step,
            "poles": [entry(e) for e in self.poles],
            "zeros": [entry(e) for e in self.zeros],
            "cancellations": [entry(e) for e in self.cancellations],
            "values": [
                {"s": cpx(v["s"]), "value": cpx(v["value"])} for v in self.values
            ],
        }


def _cluster(eigen: list[complex], tol: float) -> list[tuple[complex, int]]:
    clusters: list[list[complex]] = []
    for z in sorted(eigen, key=lambda w: (w.real, w.imag)):
        for c in clusters:
            if abs(z - c[0]) <= tol:
                c.append(z)
                break
        else:
            clusters.append([z])
    return [(sum(c) / len(c), len(c)) for c in clusters]


def poles_and_zeros(
    m: TracedMotive, q: int, samples: Sequence[complex] = ()
) -> MeromorphicReport:
    """Base solutions of q^s = eigenvalue on the principal branch; the full
    sets repeat along the imaginary lattice 2 pi / log q."""
    if q < 2:
        raise PreconditionError("q must be a prime power >= 2")
    spec = spectrum(m)
    tol = 1e-9 * (1 + max((abs(z) for z in spec.eigenvalues_plus + spec.eigenvalues_minus), default=0.0))
    plus = _cluster([z for z in spec.eigenvalues_plus if abs(z) > tol], tol)
    minus = _cluster([z for z in spec.eigenvalues_minus if abs(z) > tol], tol)

    def entries(clusters):
        return [
            {
                "s": _principal_log_q(lam, q),
                "eigenvalue": lam,
                "multiplicity": mult,
            }
            for lam, mult in clusters
        ]

    poles = entries(plus)
    zeros = entries(minus)
    cancellations = []
    for pe in poles:
        for ze in zeros:
            if abs(pe["eigenvalue"] - ze["eigenvalue"]) <= tol:
                cancellations.append(
                    {
                        "s": pe["s"],
                        "eigenvalue": pe["eigenvalue"],
                        "multiplicity": min(pe["multiplicity"], ze["multiplicity"]),
                    }
                )
    values = [{"s": complex(s), "value": hasse_weil_eval(m, q, s)} for s in samples]
    return MeromorphicReport(
        q=q,
        lattice_step=2 * math.pi / math.log(q),
        poles=poles,
        zeros=zeros,
        cancellations=cancellations,
        values=values,
    )


# --- theta construction and regularized determinants ---


@dataclass
class ThetaEntry:
    z: complex  # principal-branch log_q of the eigenvalue
    eigenvalue: complex
    multiplicity: int
    block_sizes: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "z": {"re": self.z.real, "im": self.z.imag},
            "eigenvalue": {"re": self.eigenvalue.real, "im": self.eigenvalue.imag},
            "multiplicity": self.multiplicity,
            "block_sizes": list(self.block_sizes),
        }


@dataclass
class ThetaData:
    q: int
    entries_plus: list[ThetaEntry]
    entries_minus: list[ThetaEntry]
    unipotent_blocks: list[dict]
    branch_window_ok: bool
    log_residual_ok: bool

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "entries_plus": [e.to_json() for e in self.entries_plus],
            "entries_minus": [e.to_json() for e in self.entries_minus],
            "unipotent_blocks": [
                {
                    "part": b["part"],
                    "z": {"re": b["z"].real, "im": b["z"].imag},
                    "size": b["size"],
                    "nilpotent_log": b["nilpotent_log"],
                }
                for b in self.unipotent_blocks
            ],
            "branch_window_ok": self.branch_window_ok,
            "log_residual_ok": self.log_residual_ok,
        }


def _jordan_block_sizes(mat: RatMatrix, lam: complex, alg_mult: int) -> tuple[int, ...]:
    """Block-size partition for one eigenvalue, from float ranks of
    (M - lam I)^j."""
    n = mat.rows
    a = np.array(
        [[float(mat[i, j]) for j in range(n)] for i in range(n)],
        dtype=complex,
    ) - lam * np.eye(n)
    scale = max(1.0, float(np.abs(a).max()))
    ranks = [n]
    power = np.eye(n, dtype=complex)
    for _ in range(alg_mult):
        power = power @ a
        r = int(np.linalg.matrix_rank(power, tol=1e-8 * scale ** (len(ranks))))
        ranks.append(r)
        if n - r >= alg_mult:
            break
    # number of blocks of size >= j is rank_{j-1} - rank_j
    sizes = []
    for j in range(1, len(ranks)):
        count_ge = ranks[j - 1] - ranks[j]
        sizes.append(count_ge)
    blocks = []
    for j in range(len(sizes), 0, -1):
        exact = sizes[j - 1] - (sizes[j] if j < len(sizes) else 0)
        blocks.extend([j] * exact)
    return tuple(sorted(blocks, reverse=True))


def _nilpotent_log(size: int, lam: complex) -> list[list[float]]:
    """log of the unipotent part of a size-k Jordan block at lam:
    log(I + S/lam) for the shift matrix S, a finite nilpotent series."""
    s = np.zeros((size, size), dtype=complex)
    for i in range(size - 1):
        s[i, i + 1] = 1.0 / lam
    acc = np.zeros_like(s)
    power = np.eye(size, dtype=complex)
    for j in range(1, size):
        power = power @ s
        acc += ((-1) ** (j + 1)) * power / j
    return [[abs(x) for x in row] for row in acc.tolist()]


def theta_construction(m: TracedMotive, q: int, boundary: str = "upper") -> ThetaData:
    """Principal-branch logarithms of the eigenvalues of both graded
    blocks, with Jordan data; requires invertible blocks."""
    if q < 2:
        raise PreconditionError("q must be a prime power >= 2")
    if (m.d_plus and m.f_plus.det() == 0) or (m.d_minus and m.f_minus.det() == 0):
        raise NotInvertibleError("theta construction needs invertible blocks")
    lq = math.log(q)
    window_hi = math.pi / lq
    window_lo = -math.pi / lq

    spec = spectrum(m)
    unipotent = []
    branch_ok = True
    residual_ok = True

    def build(eigen: list[complex], mat: RatMatrix, part: str) -> list[ThetaEntry]:
        nonlocal branch_ok, residual_ok
        tol = 1e-7 * (1 + max((abs(z) for z in eigen), default=0.0))
        entries = []
        for lam, mult in _cluster(eigen, tol):
            z = _principal_log_q(lam, q, boundary)
            if not (window_lo < z.imag <= window_hi + 1e-12):
                branch_ok = False
            if abs(cmath.exp(z * lq) - lam) > 1e-9 * (1 + abs(lam)):
                residual_ok = False
            sizes = (
                _jordan_block_sizes(mat, lam, mult) if mult > 1 else (1,)
            )
            entries.append(ThetaEntry(z, lam, mult, sizes))
            for size in sizes:
                if size > 1:
                    unipotent.append(
                        {
                            "part": part,
                            "z": z,
                            "size": size,
                            "nilpotent_log": _nilpotent_log(size, lam),
                        }
                    )
        return entries

    entries_plus = build(spec.eigenvalues_plus, m.f_plus, "+")
    entries_minus = build(spec.eigenvalues_minus, m.f_minus, "-")
    return ThetaData(
        q=q,
        entries_plus=entries_plus,
        entries_minus=entries_minus,
        unipotent_blocks=unipotent,
        branch_window_ok=branch_ok,
        log_residual_ok=residual_ok,
    )


def regularized_det_check(
    m: TracedMotive,
    q: int,
    samples: Sequence[complex],
    boundary: str = "upper",
) -> bool:
    """The per-eigenvalue closed form of the regularized-determinant
    quotient, prod(1 - q^{z-s}) over the odd part divided by the same over
    the even part, must reproduce Z(f; q^{-s}) at every sample; the theta
    data must also satisfy its branch-window and q^z = lambda invariants
    (a wrongly chosen branch fails here even though the product value is
    branch-independent)."""
    theta = theta_construction(m, q, boundary)
    if not theta.branch_window_ok or not theta.log_residual_ok:
        return False
    lq = math.log(q)
    for s in samples:
        reference = hasse_weil_eval(m, q, s)  # raises PoleError at poles
        num = 1.0 + 0.0j
        for entry in theta.entries_minus:
            num *= (1 - cmath.exp((entry.z - s) * lq)) ** entry.multiplicity
        den = 1.0 + 0.0j
        for entry in theta.entries_plus:
            den *= (1 - cmath.exp((entry.z - s) * lq)) ** entry.multiplicity
        value = num / den
        if abs(value - reference) > 1e-9 * (1 + abs(reference)):
            return False
    return True
