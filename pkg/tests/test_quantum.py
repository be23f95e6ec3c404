from fractions import Fraction

from hypothesis import given, settings, strategies as st

from irrec.oracle import disconnected_brute
from irrec.quantum import (HLaurent, abc_operator, connected_disconnected_check, f_bullet,
                           normal_ordering_residual, ode_residual, ordered_forms, semiclassical_residual,
                           series_exp, series_log1p, stirling_first, step_residual, wave_coeff,
                           wave_from_stirling)

h = HLaurent.hbar()
laurent = st.dictionaries(st.integers(-3, 3), st.fractions(max_denominator=9), max_size=4).map(HLaurent)


@given(laurent, laurent, laurent)
@settings(max_examples=50)
def test_hlaurent_ring(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


def test_hlaurent_inverse_and_print():
    assert (3 * h ** 2) ** -1 == HLaurent({-2: Fraction(1, 3)})
    assert (h + h ** -1).pretty() == "hbar^-1 + hbar"


def test_wave_coefficients():
    assert wave_coeff(0) == 1
    assert wave_coeff(1) == h ** -1
    assert all(wave_coeff(e) == wave_from_stirling(e) for e in range(9))
    assert [stirling_first(4, k) for k in range(5)] == [0, 6, 11, 6, 1]


def test_quantum_curve_annihilates():
    assert not any(ode_residual(12))
    assert not any(step_residual(12))


def test_perturbation_is_detected():
    r = ode_residual(6, {3: HLaurent.const(1)})
    assert r[2] and not r[0]


def test_operator_forms_agree():
    # the abc operator is the conjugated y x y - x y + 1, as an operator identity
    s = {-e: HLaurent({e % 3: e + 1, -1: Fraction(1, e + 2)}) for e in range(6)}
    first, _ = ordered_forms(s, conjugated=True)
    assert first == abc_operator(s)
    a, b = normal_ordering_residual(8)
    assert not any(a) and not any(b)
    _, c = normal_ordering_residual(8, correction=False)
    assert any(c)


def test_log_and_exp():
    table, round_trip = connected_disconnected_check(5)
    assert not any(table.values()) and round_trip == []
    F = {-1: HLaurent.const(2), -2: h}
    back = series_exp(series_log1p(F, 6), 6)
    assert {k: v for k, v in back.items() if k < 0 and k >= -6} == F


def test_disconnected_matches_permutations():
    for e in range(1, 6):
        for v in range(2 * e + 1):
            assert f_bullet(v, e) == disconnected_brute(v, e)


def test_semiclassical_limit():
    assert not any(semiclassical_residual(20))
    assert semiclassical_residual(5, {2: 1})[2]
