"""Point counting, zeta functions from counts, and Weil-type checks."""

import itertools

import pytest

from motivic_zeta import (
    NotStabilized,
    Polynomial,
    RationalFunction,
    VarietySpec,
    artin_mazur_traces,
    closed_points,
    count_points,
    euler_product_series,
    fq_make,
    linear_complexity_profile,
    twisted_count,
    weil_check,
    zeta_from_counts,
)
from motivic_zeta.errors import PreconditionError, ResourceError, ValidationError
from motivic_zeta.varieties import affine_space, enumerate_points, projective_space

from conftest import load_variety


def brute_projective_count(v: VarietySpec, n: int) -> int:
    """Reference count: enumerate all nonzero coordinate vectors and
    quotient by scalars."""
    field = fq_make(v.p, v.e * n)
    eqs = [list(eq) for eq in v.equations]
    raw = 0
    for coords in itertools.product(field.enumerate(), repeat=v.num_vars):
        if all(c.is_zero() for c in coords):
            continue
        ok = True
        for eq in eqs:
            acc = field.zero()
            for exps, coeff in eq:
                term = field.element(coeff)
                for x, e in zip(coords, exps):
                    term = term * x**e
                acc = acc + term
            if not acc.is_zero():
                ok = False
                break
        if ok:
            raw += 1
    return raw // (field.q - 1)


def test_projective_space_counts():
    assert count_points(projective_space(1, 5), 1) == 6
    assert count_points(projective_space(2, 3), 1) == 13
    assert count_points(projective_space(2, 3), 2) == 91
    assert count_points(projective_space(0, 2), 1) == 1


def test_affine_space_counts():
    assert count_points(affine_space(2, 3), 1) == 9
    assert count_points(affine_space(1, 2), 3) == 8


def test_elliptic_counts_match_brute_force():
    e5 = load_variety("elliptic_f5_variety.json")
    assert count_points(e5, 1) == 9
    assert count_points(e5, 2) == 27
    assert count_points(e5, 1) == brute_projective_count(e5, 1)
    assert count_points(e5, 2) == brute_projective_count(e5, 2)
    e7 = load_variety("elliptic_f7_variety.json")
    assert count_points(e7, 1) == 5
    assert count_points(e7, 1) == brute_projective_count(e7, 1)


def test_vectorized_path_matches_python_path():
    # 5^7 = 78125 > the python enumeration limit, so n = 7 exercises the
    # vectorized quadratic solve; cross-check against the zeta function
    e5 = load_variety("elliptic_f5_variety.json")
    a, q = -3, 5
    # N_n = q^n + 1 - alpha^n - beta^n with alpha+beta = a, alpha*beta = q
    p1, p2 = a, a * a - 2 * q
    powers = [p1, p2]
    for _ in range(3, 8):
        powers.append(a * powers[-1] - q * powers[-2])
    assert count_points(e5, 7) == q**7 + 1 - powers[6]


def test_affine_hyperbola():
    gm = load_variety("gm_f2_variety.json")
    assert [count_points(gm, n) for n in (1, 2, 3)] == [1, 3, 7]


def test_homogeneity_validation():
    with pytest.raises(ValidationError):
        VarietySpec(
            ambient_kind="projective",
            ambient_dim=1,
            p=5,
            e=1,
            equations=((((1, 0), 1), ((0, 0), 1)),),
        )


def test_budget_enforcement():
    e5 = load_variety("elliptic_f5_variety.json")
    with pytest.raises(ResourceError) as err:
        count_points(e5, 4, budget=100)
    assert err.value.required > err.value.budget == 100


def test_enumerate_points_consistent():
    p1 = projective_space(1, 5)
    pts = list(enumerate_points(p1, 1))
    assert len(pts) == count_points(p1, 1)


def test_twisted_count_identity_is_plain_count():
    p1 = load_variety("p1_f5_variety.json")
    assert twisted_count(p1, [[1, 0], [0, 1]], 1) == 6
    assert twisted_count(p1, [[1, 0], [0, 1]], 2) == 26


def test_twisted_count_sign_action():
    p1 = load_variety("p1_f5_variety.json")
    g = [[-1, 0], [0, 1]]
    # [x:y] with -Fr(x) = x: same fixed count as the untwisted Frobenius
    # on the projective line (the twist is by an element of PGL_2(F_q))
    assert twisted_count(p1, g, 1) == 6
    assert twisted_count(p1, g, 4) == 626


def test_zeta_from_counts_p1():
    w = zeta_from_counts(projective_space(1, 5), 6)
    rf = RationalFunction(Polynomial.one(), Polynomial([1, -6, 5]))
    assert list(w.series.coeffs) == rf.taylor(6)


def test_closed_points_and_euler_product():
    gm = load_variety("gm_f2_variety.json")
    b = closed_points(gm, 4)
    assert b == [1, 1, 2, 3]
    series = euler_product_series(b, 4)
    assert list(series.coeffs) == list(zeta_from_counts(gm, 4).series.coeffs)


def test_closed_points_p1():
    assert closed_points(projective_space(1, 5), 3) == [6, 10, 40]


def test_weil_check_p2():
    report = weil_check(projective_space(2, 3), 2, 8)
    assert report.stabilized
    assert report.e_degree == 3
    assert report.functional_equation_holds
    assert report.sign == -1
    assert report.rh_holds
    assert report.zeta == RationalFunction(
        Polynomial.one(), Polynomial([1, -1]) * Polynomial([1, -3]) * Polynomial([1, -9])
    )


def test_weil_check_elliptic():
    report = weil_check(load_variety("elliptic_f5_variety.json"), 1, 7)
    assert report.stabilized
    assert report.e_degree == 0
    assert report.functional_equation_holds
    assert report.sign == 1
    assert report.rh_holds
    moduli = sorted(report.reciprocal_root_moduli)
    assert abs(moduli[1] - 5**0.5) < 1e-9 and abs(moduli[2] - 5**0.5) < 1e-9


def test_weil_check_not_stabilized_with_short_data():
    report = weil_check(projective_space(2, 3), 2, 3)
    assert not report.stabilized
    assert report.zeta is None
    assert report.note


def test_artin_mazur_values():
    assert artin_mazur_traces(5, 2, 6) == [3, 5, 9, 5, 33, 65]


def test_artin_mazur_matches_direct_enumeration():
    # fixed points of x -> x^(m^n) on P^1(F_p-bar) live in small extensions;
    # count roots of x^(m^n) = x with multiplicity-free prime-to-p part
    # via the multiplicative-group order: gcd-based closed form
    import math

    p, m = 5, 2
    for n in range(1, 7):
        val = m**n - 1
        while val % p == 0:
            val //= p
        # x^(m^n - 1) = 1 has gcd(m^n - 1, p^k - 1) solutions in F_{p^k};
        # the union over k is the prime-to-p part, plus 0 and infinity
        assert artin_mazur_traces(p, m, n)[-1] == 2 + val


def test_artin_mazur_validation():
    with pytest.raises(ValidationError):
        artin_mazur_traces(4, 2, 5)
    with pytest.raises(ValidationError):
        artin_mazur_traces(5, 1, 5)
    with pytest.raises(ValidationError):
        artin_mazur_traces(5, 10, 5)


def test_artin_mazur_never_stabilizes():
    from motivic_zeta import traces_to_zeta

    traces = artin_mazur_traces(5, 2, 24)
    assert isinstance(traces_to_zeta(traces), NotStabilized)
    profile = linear_complexity_profile(traces)
    assert profile == sorted(profile)


def test_variety_json_round_trip():
    e5 = load_variety("elliptic_f5_variety.json")
    assert VarietySpec.from_json(e5.to_json()) == e5


def test_count_rejects_bad_extension():
    with pytest.raises(PreconditionError):
        count_points(projective_space(1, 5), 0)
