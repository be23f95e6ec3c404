from fractions import Fraction

from irrec import verify as V


def test_check_status():
    assert V.Check("a", "", Fraction(1, 2), Fraction(1, 2)).status == V.PASS
    c = V.Check("b", "", 1, 2)
    assert c.status == V.FAIL and c.lhs == "1" and c.rhs == "2"
    assert V.Check("c", "", 1, 2, hard=False).status == V.REPORT


def test_report_only_never_fails():
    r = V.Report("x")
    r.add("a", "", 1, 2, hard=False)
    assert r.ok and r.summary() == {V.PASS: 0, V.FAIL: 0, V.REPORT: 1}
    r.add("b", "", 1, 2)
    assert not r.ok


def test_exact_strings():
    assert V.exact_str(Fraction(-3, 4)) == "-3/4"
    assert V.exact_str(Fraction(5)) == "5"


def test_suites_cover_all_criteria():
    covered = set()
    for name, ks in V.SUITES.items():
        if name != "all":
            covered.update(ks)
    assert covered == set(V.CRITERIA) == set(V.SUITES["all"])


def test_pruned_table_rows_flag_only_genus_zero_four():
    flagged = {(g, n) for g, n, _, _, _, st in V.pruned_table_rows(4) if st == V.DISCREPANCY}
    assert flagged == {(0, 4)}


def test_reference_flat_expression_is_homogeneous():
    degs = {sum(k for _, k in key) for key in V.reference_flat_omega03()}
    assert degs == {8}
    assert {sum(k for _, k in key) for key in V.reference_flat_omega03(False)} == {8, 9}
