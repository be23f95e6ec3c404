from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from irrec.dessins import (appendix_row, b_big, c_factor, catalan, divisor_dilaton_residuals,
                           epsilon_hz, evaluate_zero_insertions, genus0_closed, hz_poly,
                           jackson_poly, structure_polynomial, three_term_u, u_count, u_count_raw)
from irrec.oracle import dessins_brute


def test_genus_zero_one_face_is_catalan():
    assert [u_count(0, (m,)) for m in range(1, 8)] == [catalan(m) for m in range(1, 8)]


def test_small_values_against_permutation_count():
    for mu in [(3,), (4,), (2, 1), (2, 2), (1, 1, 1), (3, 1, 1)]:
        brute = dessins_brute(mu)
        for g in range(3):
            assert b_big(g, mu) == brute.get(g, 0)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 2), st.randoms())
@settings(max_examples=40, deadline=None)
def test_recursion_is_symmetric(mu, g, rnd):
    mu = tuple(mu)
    shuffled = list(mu)
    rnd.shuffle(shuffled)
    assert u_count_raw(g, tuple(shuffled)) == u_count(g, mu)


def test_parity_vanishing():
    # too few edges for genus 2
    for mu in [(1,), (2,), (1, 1)]:
        assert u_count(2, mu) == 0


@pytest.mark.parametrize("g", range(4))
def test_three_term_recursion(g):
    assert [three_term_u(g, n) for n in range(1, 10)] == [u_count(g, (n,)) for n in range(1, 10)]


def test_jackson_generating_polynomial():
    for n in range(1, 7):
        G = jackson_poly(n)
        for g in range(n // 2 + 1):
            assert G[n + 1 - 2 * g] == u_count(g, (n,))


def test_harer_zagier_polynomial():
    for n in range(1, 7):
        F = hz_poly(n)
        for g in range(n // 2 + 1):
            assert F[n + 1 - 2 * g] == epsilon_hz(g, n)
    assert [epsilon_hz(1, n) for n in range(2, 5)] == [1, 10, 70]


def test_genus_zero_closed_form():
    for mu in [(1,), (5,), (2, 3), (1, 1, 1), (2, 1, 1, 1), (3, 2, 1, 1)]:
        assert genus0_closed(mu) == b_big(0, mu)


@pytest.mark.parametrize("g,n", [(0, 3), (1, 1), (1, 2), (2, 1)])
def test_structure_polynomial_matches_table(g, n):
    p = structure_polynomial(g, n)
    row = appendix_row(g, n)
    for mu in [(7,) * n, tuple(range(2, 2 + n)), (9,) + (3,) * (n - 1)]:
        assert p(*mu) == row(mu)
        assert p(*mu) * prod(c_factor(g, m) for m in mu) == b_big(g, mu)


def test_structure_polynomial_symmetric():
    assert structure_polynomial(1, 2).is_symmetric()
    assert structure_polynomial(0, 4).is_symmetric()


@pytest.mark.parametrize("g,n,mu", [(0, 3, (1, 2, 3)), (1, 1, (4,)), (1, 2, (2, 3)),
                                    (0, 2, (2, 2))])
def test_divisor_and_dilaton(g, n, mu):
    assert divisor_dilaton_residuals(g, n, mu) == (0, 0)


def test_zero_insertions_consistent_with_structure():
    from irrec.dessins import b_big_extended
    assert evaluate_zero_insertions(1, 1, 1, (4,)) == b_big_extended(1, (0, 4))
    assert evaluate_zero_insertions(0, 3, 2, (1, 2, 3)) == b_big_extended(0, (0, 0, 1, 2, 3))


def test_zero_parts_rejected():
    with pytest.raises(ValueError):
        b_big(0, (0, 2))
    assert u_count(0, (0,)) == 1
