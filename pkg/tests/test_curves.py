from fractions import Fraction

import pytest

from irrec.algebra import RatFunc
from irrec.curves import (POLY, BranchClass, CurveError, SpectralCurve, dilaton_residual,
                          expand_invariant, named_curve, partial_fractions, skew_residual,
                          string_residual, symplectic_invariant)
from irrec.eo_direct import step_check

z = RatFunc.gen()
ZERO = Fraction(0)
STABLE = [(0, 3), (1, 1), (0, 4), (1, 2), (2, 1)]


def one_point(c, g):
    return {k[0]: v for k, v in c.invariant(g, 1).terms.items()}


def test_branch_classes():
    tags = lambda name: [c for _, c in named_curve(name).branch_points]
    assert tags("dessin") == [BranchClass.IRREGULAR_SIMPLE_POLE, BranchClass.REGULAR]
    assert tags("airy") == [BranchClass.IRREGULAR_SIMPLE_POLE]
    assert tags("gauss-regular") == [BranchClass.REGULAR] * 2
    assert tags("flat-counterexample") == [BranchClass.IRREGULAR_FLAT]
    assert tags("high-pole-test") == [BranchClass.IRREGULAR_HIGH_POLE, BranchClass.REGULAR]


def test_curve_validation():
    with pytest.raises(CurveError):
        SpectralCurve(z * z, 1 / z, 1 / z)         # x not invariant
    with pytest.raises(CurveError):
        SpectralCurve(z * z, z * z, -z)            # y invariant, no kernel


def test_airy_one_point_values():
    # frozen from the closed form 2 (2g)!^3 / (2^(8g) g!^4 (2g-1))
    expect = {1: Fraction(1, 16), 2: Fraction(9, 1024), 5: Fraction(6251175, 134217728)}
    c = named_curve("airy")
    for g, v in expect.items():
        assert one_point(c, g) == {(ZERO, 2 * g): v}


def test_airy_half_one_point_values():
    c = named_curve("airy-half")
    got = [one_point(c, g)[(ZERO, 2 * g)] for g in range(1, 5)]
    assert got == [Fraction(1, 8), Fraction(9, 128), Fraction(225, 1024), Fraction(55125, 32768)]


@pytest.mark.parametrize("g,n", STABLE)
def test_dessin_invariant_structure(g, n):
    w = named_curve("dessin").invariant(g, n)
    assert w.is_symmetric()
    for slot in range(n):
        assert w.residues(slot) == {}
        assert w.pole_order(-1, slot) <= 2 * g
        assert w.pole_order(1, slot) <= 6 * g - 4 + 2 * n
        assert skew_residual(w, slot) == {}
    assert {k[0][0] for k in w.terms} <= {Fraction(-1), Fraction(1)}


def test_dessin_genus_one_pole_order_is_attained():
    assert named_curve("dessin").invariant(1, 1).pole_order(-1) == 2


@pytest.mark.parametrize("name,g,n", [("dessin", 1, 2), ("dessin", 0, 4), ("airy", 2, 1),
                                      ("gauss-regular", 1, 1)])
def test_engine_matches_direct_one_step(name, g, n):
    assert step_check(named_curve(name), g, n) == []


def test_high_pole_point_contributes_nothing():
    c = named_curve("high-pole-test")
    r = c.restricted([1])
    for g, n in [(0, 3), (1, 1), (0, 4)]:
        assert c.invariant(g, n) == r.invariant(g, n)


def test_flat_point_breaks_symmetry():
    w = named_curve("flat-counterexample").invariant(0, 3)
    assert "symmetry-not-guaranteed" in w.flags
    assert not w.swap_is_invariant(0, 1)
    assert w.swap_is_invariant(1, 2)


def test_dessin_expansion_constant_term():
    ex = expand_invariant(named_curve("dessin").invariant(0, 3), 4)
    assert ex[(0, 0, 0)] == 2


def test_partial_fractions_roundtrip():
    f = (z ** 3 + 1) / ((z - 1) ** 2 * (z + 2))
    parts = partial_fractions(f)
    rebuilt = sum(((z if b == POLY else 1 / (z - b)) ** k * c if b != POLY else c * z ** k
                   for (b, k), c in parts.items()), RatFunc(0))
    assert rebuilt == f


@pytest.mark.parametrize("name", ["dessin", "airy"])
def test_dilaton(name):
    c = named_curve(name)
    for g, n in [(0, 3), (1, 1), (1, 2)]:
        assert dilaton_residual(c, g, n).terms == {}


def test_string_regular_and_airy_witness():
    reg = named_curve("gauss-regular")
    for g, n in [(0, 3), (1, 1)]:
        for m in (0, 1):
            assert string_residual(reg, g, n, m) == {}
    assert string_residual(named_curve("airy"), 1, 1, 0) != {}


def test_symplectic_invariants():
    d = named_curve("dessin")
    assert symplectic_invariant(d, 2) == Fraction(-1, 60)   # regression value
    assert symplectic_invariant(named_curve("airy"), 2) == 0
    s = d.scaled(3)
    assert symplectic_invariant(s, 2) / symplectic_invariant(d, 2) == Fraction(1, 9)


def test_scaling_of_invariants():
    d = named_curve("dessin")
    s = d.scaled(2)
    for g, n in [(0, 3), (1, 1)]:
        lam = Fraction(2) ** (2 - 2 * g - n)
        assert s.invariant(g, n).terms == {k: v * lam for k, v in d.invariant(g, n).terms.items()}
