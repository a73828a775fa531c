"""Growth rates, Hasse-Weil evaluation, poles, theta data and
regularized determinants."""

import cmath
import math

import pytest

from motivic_zeta import (
    Inapplicable,
    RatMatrix,
    TracedMotive,
    convergence_abscissa,
    growth_bound_check,
    hasse_weil_eval,
    poles_and_zeros,
    rate_estimate,
    rate_exact,
    regularized_det_check,
    spectral_radius,
    spectrum,
    theta_construction,
    trace_sequence,
)
from motivic_zeta.errors import NotInvertibleError, PoleError, PreconditionError


def motive(plus_rows, minus_rows=None) -> TracedMotive:
    fp = RatMatrix.from_rows(plus_rows) if plus_rows else RatMatrix.empty()
    fm = RatMatrix.from_rows(minus_rows) if minus_rows else RatMatrix.empty()
    return TracedMotive(fp, fm)


def test_spectrum_p1(p1_motive):
    spec = spectrum(p1_motive)
    vals = sorted(abs(z) for z in spec.eigenvalues_plus)
    assert abs(vals[0] - 1) < 1e-9 and abs(vals[1] - 5) < 1e-9
    assert spec.eigenvalues_minus == []


def test_spectral_radius_elliptic(elliptic_f5_motive):
    rp, rm, rho = spectral_radius(elliptic_f5_motive)
    assert abs(rp - 5) < 1e-9
    assert abs(rm - math.sqrt(5)) < 1e-9
    assert rho == rp


def test_rate_exact_p1(p1_motive):
    assert abs(rate_exact(p1_motive) - math.log(5)) < 1e-12


def test_rate_exact_constant_and_alternating():
    assert rate_exact(motive([[1]])) == 0.0
    assert rate_exact(motive([[-1]])) == 0.0


def test_rate_exact_inapplicable_on_cancellation():
    # same top eigenvalue in both parts: leading terms cancel
    m = motive([[3]], [[3]])
    assert isinstance(rate_exact(m), Inapplicable)
    assert isinstance(rate_exact(motive(None)), Inapplicable)


def test_rate_estimate_tracks_exact(p1_motive):
    traces = [float(t) for t in trace_sequence(p1_motive, 30)]
    assert abs(rate_estimate(traces) - math.log(5)) < 1e-3


def test_growth_bound(p1_motive, elliptic_f5_motive):
    assert growth_bound_check(p1_motive, 40)
    assert growth_bound_check(elliptic_f5_motive, 40)
    assert growth_bound_check(motive([[1, 1], [0, 1]]), 40)  # unipotent


def test_hasse_weil_eval_p1(p1_motive):
    # Z(t) = 1/((1-t)(1-5t)) at t = 5^-2
    val = hasse_weil_eval(p1_motive, 5, 2.0)
    assert abs(val - 125 / 96) < 1e-12


def test_hasse_weil_periodicity(p1_motive):
    s = 2.25 + 0.4j
    step = 2j * math.pi / math.log(5)
    a = hasse_weil_eval(p1_motive, 5, s)
    b = hasse_weil_eval(p1_motive, 5, s + step)
    assert abs(a - b) <= 1e-9 * (1 + abs(a))


def test_hasse_weil_pole_detection(p1_motive):
    with pytest.raises(PoleError) as err:
        hasse_weil_eval(p1_motive, 5, 1.0)
    assert abs(err.value.nearest_pole - 1.0) < 1e-9
    with pytest.raises(PoleError):
        hasse_weil_eval(p1_motive, 5, 0.0)


def test_convergence_abscissa(p1_motive, elliptic_f5_motive):
    assert abs(convergence_abscissa(p1_motive, 5) - 1.0) < 1e-12
    assert abs(convergence_abscissa(elliptic_f5_motive, 5) - 1.0) < 1e-12
    assert convergence_abscissa(motive(None), 5) == float("-inf")


def test_poles_and_zeros_p1(p1_motive):
    report = poles_and_zeros(p1_motive, 5, samples=[2.5])
    assert abs(report.lattice_step - 2 * math.pi / math.log(5)) < 1e-12
    pole_s = sorted(e["s"].real for e in report.poles)
    assert abs(pole_s[0] - 0.0) < 1e-9 and abs(pole_s[1] - 1.0) < 1e-9
    assert report.zeros == []
    assert abs(report.values[0]["value"] - hasse_weil_eval(p1_motive, 5, 2.5)) < 1e-12


def test_poles_and_zeros_cancellation():
    m = motive([[2, 0], [0, 3]], [[2]])
    report = poles_and_zeros(m, 2)
    assert len(report.cancellations) == 1
    assert abs(report.cancellations[0]["eigenvalue"] - 2) < 1e-9


def test_theta_construction_p1(p1_motive):
    theta = theta_construction(p1_motive, 5)
    assert theta.branch_window_ok and theta.log_residual_ok
    zs = sorted(e.z.real for e in theta.entries_plus)
    assert abs(zs[0] - 0.0) < 1e-9 and abs(zs[1] - 1.0) < 1e-9
    assert theta.unipotent_blocks == []


def test_theta_negative_eigenvalue_on_boundary():
    m = motive([[-5]])
    theta = theta_construction(m, 2)
    assert theta.branch_window_ok
    z = theta.entries_plus[0].z
    assert abs(z.imag - math.pi / math.log(2)) < 1e-12  # boundary is included
    wrong = theta_construction(m, 2, boundary="lower")
    assert not wrong.branch_window_ok


def test_theta_jordan_blocks():
    m = motive([[2, 1], [0, 2]])
    theta = theta_construction(m, 2)
    entry = theta.entries_plus[0]
    assert entry.multiplicity == 2
    assert entry.block_sizes == (2,)
    assert len(theta.unipotent_blocks) == 1
    assert theta.unipotent_blocks[0]["size"] == 2


def test_theta_requires_invertible_blocks():
    with pytest.raises(NotInvertibleError):
        theta_construction(motive([[0]]), 5)


def test_regularized_det_matches_zeta(p1_motive, elliptic_f5_motive):
    samples = [2.5, 3.0 + 1.0j, 2.0 - 2.0j]
    assert regularized_det_check(p1_motive, 5, samples)
    assert regularized_det_check(elliptic_f5_motive, 5, samples)


def test_regularized_det_branch_sentinel():
    m = motive([[-5]])
    samples = [3.5 + 0.3j, 4.0 - 1.1j]
    assert regularized_det_check(m, 2, samples)
    assert not regularized_det_check(m, 2, samples, boundary="lower")


def test_q_validation(p1_motive):
    with pytest.raises(PreconditionError):
        hasse_weil_eval(p1_motive, 1, 2.0)
    with pytest.raises(PreconditionError):
        theta_construction(p1_motive, 0)
