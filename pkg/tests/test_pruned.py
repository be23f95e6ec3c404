from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from irrec.algebra import MPoly
from irrec.dessins import b_big
from irrec.oracle import compositions_upto, pruned_brute
from irrec.pruned import (FitError, b_pruned, b_pruned_asym, fit_quasipolynomial,
                          fit_quasipolynomial_points, glue_coefficient, nb_count,
                          nb_quasipolynomial, p_minus_extract, pruned_series_residual,
                          pruned_table_row, psi_leading_check, quasipoly_fit,
                          tree_glue_transform)

parts = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple)


def test_base_values():
    assert b_pruned(0, (2, 2)) == Fraction(1, 2)
    assert b_pruned(0, (2, 1)) == 0
    assert b_pruned(0, (5, 1, 3)) == 2
    assert b_pruned(1, (3,)) == Fraction(1, 3)


@given(parts, st.integers(0, 2))
@settings(max_examples=50, deadline=None)
def test_symmetric_equals_asymmetric(mu, g):
    if 2 * g - 2 + len(mu) > 0:
        assert b_pruned(g, mu) == b_pruned_asym(g, mu)


@given(parts, st.integers(0, 2))
@settings(max_examples=30, deadline=None)
def test_tree_gluing_recovers_unpruned(mu, g):
    if (g, len(mu)) != (0, 1):
        assert tree_glue_transform(g, mu) == b_big(g, mu)


def test_oracle_agreement():
    for mu in compositions_upto(5):
        brute = pruned_brute(mu)
        for g in range(3):
            if (g, len(mu)) != (0, 1):
                assert b_pruned(g, mu) == brute.get(g, 0), (g, mu)


def test_glue_coefficients():
    assert [glue_coefficient(1, k) for k in range(5)] == [1, 1, 2, 5, 14]


@pytest.mark.parametrize("g,n", [(0, 3), (1, 1), (1, 2), (2, 1)])
def test_reference_rows(g, n):
    row = pruned_table_row(g, n)
    for mu in [(1,) * n, (2,) * n, tuple(range(3, 3 + n)), (6,) + (5,) * (n - 1)]:
        assert b_pruned(g, mu) == row(mu)


def test_genus_zero_four_row_is_twice_the_reference():
    row = pruned_table_row(0, 4)
    for mu in [(1, 1, 1, 1), (3, 2, 2, 1), (5, 4, 1, 1)]:
        assert b_pruned(0, mu) == 2 * row(mu)


@pytest.mark.parametrize("g,n", [(0, 4), (1, 1), (1, 2), (2, 1)])
def test_quasipolynomial_structure(g, n):
    q = quasipoly_fit(g, n)
    assert q.is_symmetric()
    assert max(p.degree() for p in q.classes.values()) <= 3 * g - 3 + n


@pytest.mark.parametrize("g,exps,intersection", [
    (0, (0, 0, 0), 1), (1, (1,), Fraction(1, 24)), (2, (4,), Fraction(1, 1152)),
    (1, (1, 1), Fraction(1, 24))])
def test_leading_coefficients(g, exps, intersection):
    assert psi_leading_check(g, len(exps), exps, intersection) == 0


def test_fit_rejects_non_quasipolynomial():
    with pytest.raises(FitError):
        fit_quasipolynomial(lambda mu: Fraction(2) ** mu[0], 1, 2)
    with pytest.raises(FitError):
        fit_quasipolynomial_points({(1,): 1}, 1, 3)


@pytest.mark.parametrize("g,n,order", [(0, 3, 5), (1, 1, 8), (1, 2, 6), (0, 2, 6)])
def test_pruned_and_unpruned_generating_series(g, n, order):
    assert pruned_series_residual(g, n, order) == {}


def test_nb_small_values():
    assert nb_count(1, (1,)) == 0
    assert nb_count(1, (2,)) == Fraction(1, 2)
    assert all(nb_count(0, mu) == 0 for mu in compositions_upto(4) if len(mu) >= 2)


def test_nb_one_variable_quasipolynomial():
    # fitted from the fatgraph oracle
    q = nb_quasipolynomial(1, 1, 6)
    m2 = MPoly.gens(1, ("m1^2",))[0]
    assert q.classes[(0,)] == m2 / 8
    assert q.classes[(1,)] == m2 / 8 - Fraction(1, 8)
    assert p_minus_extract(q).value == MPoly.const(Fraction(1, 8), 1)


@pytest.mark.slow
def test_nb_two_variable_p_minus():
    # fitted from the fatgraph oracle; p^- = -1/16
    q = nb_quasipolynomial(1, 2, 8)
    pm = p_minus_extract(q)
    assert pm.value == MPoly.const(Fraction(-1, 16), 2)
    for mu in [(2, 4), (3, 5), (1, 2)]:
        assert q(*mu) == nb_count(1, mu)
