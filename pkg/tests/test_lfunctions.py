"""Equivariant L-series and orbifold zeta functions."""

from fractions import Fraction

import pytest

from motivic_zeta import (
    Character,
    Cyclotomic,
    GroupAction,
    l_function,
    orbifold_zeta,
    rational_character,
    trivial_character,
    zeta_from_counts,
)
from motivic_zeta.errors import ValidationError

from conftest import load_variety


@pytest.fixture
def p1_f5():
    return load_variety("p1_f5_variety.json")


@pytest.fixture
def z2_action(p1_f5):
    return GroupAction(p1_f5, [[[1, 0], [0, 1]], [[-1, 0], [0, 1]]])


def test_cyclotomic_arithmetic():
    i = Cyclotomic.root_of_unity(1, 4)
    # the group algebra Q[x]/(x^4 - 1) keeps x^2 and -1 distinct, but they
    # agree as complex numbers
    assert i * i == Cyclotomic.root_of_unity(2, 4)
    assert abs((i * i).to_complex() + 1) < 1e-12
    assert (i * i * i * i).is_rational()
    assert (i + (-i)).rational_value() == 0
    assert not i.is_rational()
    with pytest.raises(ValidationError):
        i.rational_value()
    with pytest.raises(ValidationError):
        # addition across different cyclotomic orders is rejected
        _ = i + Cyclotomic.rational(1, 3)


def test_cyclotomic_to_complex():
    i = Cyclotomic.root_of_unity(1, 4)
    assert abs(i.to_complex() - 1j) < 1e-12


def test_group_action_structure(z2_action):
    assert len(z2_action) == 2
    assert len(z2_action.class_reps) == 2  # abelian group: singleton classes
    assert z2_action.element_orders == [1, 2]


def test_group_action_requires_closure(p1_f5):
    with pytest.raises(ValidationError):
        GroupAction(p1_f5, [[[1, 0], [0, 1]], [[2, 0], [0, 1]]])


def test_group_action_must_preserve_variety():
    e5 = load_variety("elliptic_f5_variety.json")
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]  # closed involution, but x <-> y
    with pytest.raises(ValidationError):
        GroupAction(e5, [[[1, 0, 0], [0, 1, 0], [0, 0, 1]], swap])


def test_character_validation(z2_action):
    with pytest.raises(ValidationError):
        rational_character(z2_action, [0, 1]).check_against(z2_action)
    chi = rational_character(z2_action, [1, -1])
    chi.check_against(z2_action)


def test_trivial_character_recovers_zeta(p1_f5, z2_action):
    ls = l_function(p1_f5, z2_action, trivial_character(z2_action), 5)
    assert ls.is_rational()
    assert ls.to_truncated_series() == zeta_from_counts(p1_f5, 5).series


def test_sign_character_l_series(p1_f5, z2_action):
    # both twisted counts equal q^n + 1 here, so the sign-isotypic piece
    # is trivial and L(chi_sign) = 1
    ls = l_function(p1_f5, z2_action, rational_character(z2_action, [1, -1]), 5)
    assert ls.is_rational()
    coeffs = ls.to_truncated_series().coeffs
    assert coeffs[0] == 1 and all(c == 0 for c in coeffs[1:])


def test_character_l_functions_multiply_to_equivariant_product(p1_f5, z2_action):
    # prod_chi L(chi)^deg(chi) = Z_X for abelian G acting on X
    triv = l_function(p1_f5, z2_action, trivial_character(z2_action), 5)
    sign = l_function(p1_f5, z2_action, rational_character(z2_action, [1, -1]), 5)
    prod = triv.to_truncated_series() * sign.to_truncated_series()
    assert prod == zeta_from_counts(p1_f5, 5).series


def test_orbifold_routes_agree(p1_f5, z2_action):
    report = orbifold_zeta(p1_f5, z2_action, 5)
    assert report.routes_agree
    assert report.direct == report.product
    # inertia contributions: (q^n + 1) from the identity sector plus 2
    # from the two fixed points of the involution
    assert report.traces == [Fraction(5**n + 3) for n in range(1, 6)]


def test_orbifold_rejects_bad_group_order():
    p1_f2 = load_variety("p1_f5_variety.json")
    # build the same involution over F_2 where |G| = 2 = p
    from motivic_zeta.varieties import projective_space

    v = projective_space(1, 2)
    action = GroupAction(v, [[[1, 0], [0, 1]]])
    report = orbifold_zeta(v, action, 3)  # trivial group is fine
    assert report.routes_agree
    two = GroupAction(v, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    with pytest.raises(ValidationError):
        orbifold_zeta(v, two, 3)


def test_trivial_group_orbifold_is_plain_zeta(p1_f5):
    action = GroupAction(p1_f5, [[[1, 0], [0, 1]]])
    report = orbifold_zeta(p1_f5, action, 5)
    assert report.direct.series == zeta_from_counts(p1_f5, 5).series
