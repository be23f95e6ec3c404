from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from irrec.curves import named_curve
from irrec.local import (FULL, HALF, airy_one_point, airy_one_point_psi, displayed_u2,
                         laplace_coefficients, odd_partitions, one_point_closed,
                         one_point_ode_rec, reference_u_row, reference_volume, scaled_one_point,
                         u_airy_rec, u_table, volume_dilaton_residual, volume_recursion_residual,
                         volume_top_coeff_check, volumes)


def test_closed_form_and_ode():
    assert all(one_point_closed(g) == one_point_ode_rec(g) for g in range(10))
    assert one_point_closed(1) == Fraction(1, 16)


def test_scaled_one_point():
    assert scaled_one_point(2) == Fraction(9, 128)
    assert [u_airy_rec(g, (2 * g - 1,)) for g in range(1, 5)] == \
        [scaled_one_point(g) for g in range(1, 5)]


def test_airy_comparison_forms_agree():
    assert airy_one_point(1) == airy_one_point_psi(1, Fraction(1, 24)) == Fraction(1, 16)


@given(st.lists(st.integers(1, 7), min_size=1, max_size=4), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_support_and_symmetry(mu, g):
    mu = tuple(mu)
    v = u_airy_rec(g, mu)
    if any(m % 2 == 0 for m in mu) or sum(mu) != 2 * g - 2 + len(mu):
        assert v == 0
    for p in set(permutations(mu)):
        assert u_airy_rec(g, p) == v


def test_normalizations():
    for g, mu in [(1, (1, 1)), (2, (3, 1)), (3, (5,))]:
        assert u_airy_rec(g, mu, FULL) == Fraction(2) ** (2 - 2 * g - len(mu)) * u_airy_rec(g, mu, HALF)
    with pytest.raises(ValueError):
        u_airy_rec(1, (1,), "other")


@pytest.mark.parametrize("g", [1, 3])
def test_reference_rows(g):
    for n in range(1, 5):
        assert {k: v for k, v in u_table(g, n).items() if v} == reference_u_row(g, n)


def test_genus_two_row_matches_engine_not_reference():
    for n in range(1, 4):
        key = (3,) + (1,) * (n - 1)
        assert u_table(2, n) == {key: displayed_u2(n)}
        assert reference_u_row(2, n)[key] * 3 == displayed_u2(n)
    half = named_curve("airy-half")
    w = half.invariant(2, 2)
    assert w.terms[((0, 4), (0, 2))] == displayed_u2(2)


def test_engine_agrees_with_table():
    half = named_curve("airy-half")
    for g, n in [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]:
        got = {tuple(k - 1 for _, k in key): v for key, v in half.invariant(g, n).terms.items()}
        for mu in got:
            assert got[mu] == u_airy_rec(g, mu)


def test_odd_partitions():
    assert odd_partitions(6, 2) == [(5, 1), (3, 3)]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_volumes(g):
    for n in range(1, 4):
        V = volumes(g, n)
        assert V == reference_volume(g, n)
        assert V.is_symmetric() and V.degree() == 2 * g - 2
        assert volume_dilaton_residual(g, n) == 0
        assert volume_top_coeff_check(g, n) == 0


@pytest.mark.parametrize("g,n", [(1, 2), (2, 1), (2, 2), (3, 1)])
def test_volume_recursion(g, n):
    assert not volume_recursion_residual(g, n)


def test_laplace_transform_returns_table():
    V = volumes(3, 2)
    assert laplace_coefficients(V) == {mu: u_airy_rec(3, mu) for mu in laplace_coefficients(V)}
