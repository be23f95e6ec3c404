from fractions import Fraction

import pytest

from irrec.dessins import b_big
from irrec.oracle import (CalibrationError, OracleSizeError, bipartite_double_residuals,
                          bound_probe, calibrate, compositions_upto, cycles, dessin_sweep,
                          dessins_brute, dessins_brute_literal, exponential_check,
                          face_permutation, fatgraphs_brute)


def test_face_permutation():
    assert cycles(face_permutation((2, 3))) == [[0, 1], [2, 3, 4]]


def test_calibration():
    assert calibrate() is True
    assert issubclass(CalibrationError, AssertionError)


def test_reduction_matches_all_pairs():
    for mu in compositions_upto(4):
        assert dessins_brute_literal(mu) == dessins_brute(mu)


def test_sweep_independent_of_workers():
    assert dessin_sweep(5, workers=1) == dessin_sweep(5, workers=2)


def test_sweep_matches_recursion():
    for mu, vals in dessin_sweep(6).items():
        for g, v in vals.items():
            assert b_big(g, mu) == v


def test_size_limit():
    with pytest.raises(OracleSizeError):
        dessins_brute((5, 4))


def test_fatgraph_values():
    assert fatgraphs_brute((2, 2, 2), genus=0) == 1
    assert fatgraphs_brute((3,), genus=0) == 0
    assert fatgraphs_brute((4,), genus=1) == Fraction(1, 4)


def test_exponential_formula():
    assert not any(exponential_check(4).values())


def test_bipartite_double():
    assert not any(bipartite_double_residuals(4).values())


def test_bound_probe_rows():
    rows = bound_probe(3)
    assert rows and all(len(r) == 4 for r in rows)
