"""Verification suites: each acceptance criterion as a list of exact checks.

A check compares two exact values.  Hard checks fail when they differ;
report-only checks are recorded but never fail a suite.  Values are
serialized as strings (``num/den`` for rationals).
"""
import time
from fractions import Fraction
from itertools import permutations, product
from math import prod

PASS, FAIL, REPORT = "pass", "fail", "report-only"
DISCREPANCY = "reference-discrepancy"


def exact_str(v):
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
    if hasattr(v, "pretty"):
        return v.pretty()
    return str(v)


class Check:
    def __init__(self, cid, description, lhs, rhs, hard=True, anchor=""):
        self.id = cid
        self.description = description
        self.lhs = exact_str(lhs)
        self.rhs = exact_str(rhs)
        self.hard = hard
        self.anchor = anchor
        self.status = (PASS if lhs == rhs else FAIL) if hard else REPORT

    def as_dict(self):
        return {"id": self.id, "description": self.description, "status": self.status,
                "lhs": self.lhs, "rhs": self.rhs, "anchor": self.anchor}


class Report:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []
        self.seconds = {}

    def add(self, *args, **kw):
        c = Check(*args, **kw)
        self.checks.append(c)
        return c

    def extend(self, other):
        self.checks.extend(other.checks)
        self.seconds.update(other.seconds)
        return self

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        counts = {PASS: 0, FAIL: 0, REPORT: 0}
        for c in self.checks:
            counts[c.status] += 1
        return counts

    def as_dict(self):
        return {"suite": self.suite, "checks": [c.as_dict() for c in self.checks],
                "summary": self.summary()}

    def lines(self):
        out = ["%-12s %s  %s" % (c.status, c.id, c.description) for c in self.checks]
        for c in self.checks:
            if c.status == FAIL:
                out.append("  %s: %s != %s" % (c.id, c.lhs, c.rhs))
        s = self.summary()
        out.append("%s: %d pass, %d fail, %d report-only" % (self.suite, s[PASS], s[FAIL], s[REPORT]))
        return out


def _mismatches(pairs):
    """Keys where the two values differ; pairs is an iterable of (key, a, b)."""
    return [k for k, a, b in pairs if a != b]


# --- criterion 1 ----------------------------------------------------------

def criterion_1():
    from .dessins import catalan, u_count
    r = Report("catalan")
    bad = _mismatches((m, u_count(0, (m,)), catalan(m)) for m in range(1, 13))
    r.add("1.catalan", "U_0(m) equals the Catalan number for m <= 12", len(bad), 0,
          anchor="genus-0 one-face count")
    return r


# --- criterion 2 ----------------------------------------------------------

def catalan_coordinate(order):
    """``z(u)`` inverting ``u = z/(1+z)^2``, i.e. ``u = 1/x`` on the dessin curve."""
    from .algebra import RatFunc, revert, series_expand
    z = RatFunc.gen()
    return revert(series_expand(z / (1 + z) ** 2, 0, order + 2), order)


def criterion_2(order=8, max_size=8):
    from .curves import expand_invariant, named_curve
    from .dessins import u_count
    from .pruned import b_pruned
    r = Report("main-theorem")
    curve = named_curve("dessin")
    zu = catalan_coordinate(max_size + 2)
    for g, n in [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]:
        w = curve.invariant(g, n)
        ex = expand_invariant(w, order)
        bad = _mismatches(
            (e, ex.get(e, 0), b_pruned(g, tuple(k + 1 for k in e)) * prod(k + 1 for k in e))
            for e in product(range(order + 1), repeat=n))
        r.add("2.z(%d,%d)" % (g, n),
              "z-expansion of omega^%d_%d equals sum b(nu) prod nu_i z_i^(nu_i-1), exponents <= %d"
              % (g, n, order), len(bad), 0, anchor="pruned counts as z-expansion")
        per = max_size - (n - 1)
        xu = expand_invariant(w, per, coordinate=zu)
        cells = [e for e in product(range(per + 1), repeat=n) if sum(e) + n <= max_size]
        bad = _mismatches((e, xu.get(e, 0), u_count(g, tuple(k + 1 for k in e))) for e in cells)
        r.add("2.x(%d,%d)" % (g, n),
              "x-expansion of omega^%d_%d equals sum U_g(mu) prod u_i^(mu_i-1), |mu| <= %d"
              % (g, n, max_size), len(bad), 0, anchor="dessin counts as x-expansion")
    return r


# --- criterion 3 ----------------------------------------------------------

def criterion_3():
    from .dessins import three_term_u, u_count
    r = Report("three-term")
    bad = _mismatches(((g, n), three_term_u(g, n), u_count(g, (n,)))
                      for g in range(5) for n in range(1, 15))
    r.add("3.three-term", "three-term recursion equals cut-and-join for g <= 4, n <= 14",
          len(bad), 0, anchor="one-face three-term recursion")
    return r


# --- criterion 4 ----------------------------------------------------------

APPENDIX_ROWS = [(0, 1), (0, 2), (0, 3), (0, 5), (0, 6), (1, 1), (1, 2), (2, 1), (3, 1)]


def appendix_points(n, count=10):
    pts = []
    k = 1
    while len(pts) < count:
        for mu in product(range(1, k + 1), repeat=n):
            if max(mu) == k and list(mu) == sorted(mu, reverse=True):
                pts.append(mu)
        k += 1
    return pts[:max(count, 10)]


def criterion_4():
    from .dessins import appendix_row, b_big, c_factor
    r = Report("structure")
    for g, n in APPENDIX_ROWS:
        row = appendix_row(g, n)
        pts = appendix_points(n, 12 if n <= 2 else 10)
        bad = _mismatches((mu, b_big(g, mu) / prod(c_factor(g, m) for m in mu), row(mu))
                          for mu in pts)
        r.add("4.row(%d,%d)" % (g, n), "B/prod c_g equals the reference polynomial at %d points"
              % len(pts), len(bad), 0, anchor="B over c_g polynomial table")
    return r


# --- criterion 5 ----------------------------------------------------------

PRUNED_ROWS = [(0, 2), (0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]
KNOWN_PRUNED_DISCREPANCIES = {(0, 4)}


def pruned_table_rows(max_part=6):
    """Rows ``(g, n, mu, computed, reference, status)`` of the pruned table."""
    from .pruned import b_pruned, pruned_table_row
    rows = []
    for g, n in PRUNED_ROWS:
        ref = pruned_table_row(g, n)
        for mu in product(range(1, max_part + 1), repeat=n):
            if list(mu) != sorted(mu, reverse=True):
                continue
            val, expect = b_pruned(g, mu), ref(mu)
            rows.append((g, n, mu, val, expect, PASS if val == expect else DISCREPANCY))
    return rows


def criterion_5(max_size=8):
    from .dessins import b_big
    from .oracle import compositions_upto
    from .pruned import b_pruned, b_pruned_asym, tree_glue_transform
    r = Report("pruned")
    sym_bad, glue_bad, total = [], [], 0
    for mu in compositions_upto(max_size):
        n = len(mu)
        for g in range(0, sum(mu) // 2 + 2):
            if 2 * g - 2 + n <= 0 and (g, n) != (0, 2):
                continue
            total += 1
            if 2 * g - 2 + n > 0 and b_pruned(g, mu) != b_pruned_asym(g, mu):
                sym_bad.append((g, mu))
            if tree_glue_transform(g, mu) != b_big(g, mu):
                glue_bad.append((g, mu))
    r.add("5.sym-asym", "symmetric and asymmetric recursions agree for |mu| <= %d" % max_size,
          len(sym_bad), 0, anchor="pruned recursions")
    r.add("5.tree-glue", "tree gluing of b reproduces B for |mu| <= %d (%d cells)"
          % (max_size, total), len(glue_bad), 0, anchor="pruned to unpruned transform")
    rows = pruned_table_rows()
    flagged = sorted({(g, n) for g, n, _, _, _, st in rows if st == DISCREPANCY})
    r.add("5.table", "pruned table rows match apart from flagged rows",
          sum(1 for row in rows if row[5] == DISCREPANCY and row[:2] not in KNOWN_PRUNED_DISCREPANCIES),
          0, anchor="pruned table")
    r.add("5.flag", "flagged discrepancy rows", flagged, sorted(KNOWN_PRUNED_DISCREPANCIES),
          anchor="pruned table (0,4)")
    ratio = {row[3] / row[4] for row in rows if row[:2] == (0, 4)}
    r.add("5.flag-ratio", "recursion / reference on row (0,4)", sorted(ratio), [Fraction(2)],
          hard=False, anchor="pruned table (0,4)")
    return r


# --- criterion 6 ----------------------------------------------------------

def criterion_6():
    from .curves import named_curve
    from .local import one_point_closed, one_point_ode_rec, scaled_one_point
    r = Report("one-point")
    bad = _mismatches((g, one_point_closed(g), one_point_ode_rec(g)) for g in range(9))
    r.add("6.closed-ode", "closed form equals the ODE recursion for g <= 8", len(bad), 0,
          anchor="one-point closed form")
    full = named_curve("airy")
    for g in range(1, 6):
        terms = full.invariant(g, 1).terms
        r.add("6.engine(%d)" % g, "recursion on x=z^2, y=1/z gives omega^%d_1" % g,
              terms, {((Fraction(0), 2 * g),): one_point_closed(g)}, anchor="one-point closed form")
    half = named_curve("airy-half")
    for g in range(1, 5):
        terms = half.invariant(g, 1).terms
        r.add("6.scaling(%d)" % g, "x=z^2/2 value equals 2^(2g-1) times the x=z^2 value",
              terms, {((Fraction(0), 2 * g),): scaled_one_point(g)}, anchor="normalization bridge")
    return r


# --- criterion 7 ----------------------------------------------------------

def criterion_7(max_n=5):
    from .curves import named_curve
    from .local import displayed_u2, reference_u_row, u_table
    r = Report("u-tables")
    for g in (1, 3):
        bad = [n for n in range(1, max_n + 1)
               if {k: v for k, v in u_table(g, n).items() if v} != reference_u_row(g, n)]
        r.add("7.u%d" % g, "u_%d rows reproduced for n <= %d" % (g, max_n), bad, [],
              anchor="u-coefficient table")
    ones = lambda n: (3,) + (1,) * (n - 1)
    bad = [n for n in range(1, max_n + 1)
           if {k: v for k, v in u_table(2, n).items() if v} != {ones(n): displayed_u2(n)}]
    r.add("7.u2", "u_2(3,1,..,1) = 2^-8 3^2 (n+1)! for n <= %d" % max_n, bad, [],
          anchor="displayed omega^2_n")
    half = named_curve("airy-half")
    bad = []
    for n in range(1, 4):
        key = tuple((Fraction(0), k + 1) for k in ones(n))
        if half.invariant(2, n).terms.get(key) != displayed_u2(n):
            bad.append(n)
    r.add("7.u2-engine", "recursion on x=z^2/2 agrees with u_2 for n <= 3", bad, [],
          anchor="displayed omega^2_n")
    flagged = [n for n in range(1, max_n + 1) if reference_u_row(2, n) != u_table(2, n)]
    r.add("7.u2-flag", "reference u_2 row flagged as discrepant for every n", flagged,
          list(range(1, max_n + 1)), anchor="u-coefficient table, u_2 row")
    r.add("7.u2-ratio", "computed / reference u_2(3)", u_table(2, 1)[(3,)] / reference_u_row(2, 1)[(3,)],
          Fraction(3), hard=False, anchor="u-coefficient table, u_2 row")
    return r


# --- criterion 8 ----------------------------------------------------------

def criterion_8():
    from .local import (reference_volume, volume_dilaton_residual, volume_recursion_residual,
                        volume_top_coeff_check, volumes, laplace_coefficients, u_airy_rec)
    r = Report("volumes")
    for g in (1, 2, 3):
        bad = [n for n in range(1, 5) if volumes(g, n) != reference_volume(g, n)]
        r.add("8.V%d" % g, "V_%d matches the closed form for n <= 4" % g, bad, [],
              anchor="volume formulae")
    for g, n in [(1, 2), (2, 1), (2, 2), (3, 1)]:
        res = volume_recursion_residual(g, n)
        r.add("8.rec(%d,%d)" % (g, n), "volume recursion residual", res, 0, anchor="volume recursion")
    for g in (1, 2, 3):
        bad = [n for n in range(1, 4) if volume_dilaton_residual(g, n)]
        r.add("8.dil(%d)" % g, "V_g(L, 0) = (2g-2+n) V_g(L) for n <= 3", bad, [],
              anchor="volume dilaton")
        bad = [n for n in range(1, 4) if volume_top_coeff_check(g, n)]
        r.add("8.top(%d)" % g, "top coefficient of V_g for n <= 3", bad, [],
              anchor="volume leading term")
    bad = []
    for g, n in [(2, 2), (3, 2), (3, 3)]:
        for mu, u in laplace_coefficients(volumes(g, n)).items():
            if u != u_airy_rec(g, mu):
                bad.append((g, mu))
    r.add("8.laplace", "Laplace transform of V_g reproduces u_g", bad, [], anchor="volume duality")
    return r


# --- criterion 9 ----------------------------------------------------------

def criterion_9():
    from .quantum import (HLaurent, connected_disconnected_check, normal_ordering_residual,
                          ode_residual, semiclassical_residual, step_residual, wave_coeff,
                          wave_from_stirling)
    r = Report("quantum")
    nz = lambda xs: [i for i, v in enumerate(xs) if v]
    r.add("9.ode", "quantum curve residuals vanish through x^-12", nz(ode_residual(12)), [],
          anchor="quantum curve ODE")
    r.add("9.step", "(e+1) a_{e+1} = hbar (1/hbar + e)^2 a_e for e < 12", nz(step_residual(12)), [],
          anchor="quantum curve ODE")
    perturbed = ode_residual(6, {3: HLaurent.const(1)})
    r.add("9.ode-control", "perturbing a_3 leaves a residual at x^-3", bool(perturbed[2]), True,
          anchor="negative control")
    r.add("9.stirling", "a_e equals the Stirling expansion for e <= 8",
          [e for e in range(9) if wave_coeff(e) != wave_from_stirling(e)], [],
          anchor="wave function coefficients")
    table, round_trip = connected_disconnected_check(6)
    r.add("9.log", "log of the wave function matches connected counts for e <= 6",
          sorted(k for k, v in table.items() if v), [], anchor="exponential formula")
    r.add("9.exp-log", "exp(log Zm) = Zm through x^-6", round_trip, [], anchor="exponential formula")
    r.add("9.semiclassical", "x y^2 - x y + 1 = 0 through x^-20 for y = sum U_0(m) x^(-m-1)",
          nz(semiclassical_residual(20)), [], anchor="semiclassical limit")
    r.add("9.semiclassical-control", "perturbing U_0(2) leaves a residual at x^-2",
          bool(semiclassical_residual(5, {2: 1})[2]), True, anchor="negative control")
    a, b = normal_ordering_residual(10)
    r.add("9.ordering", "both operator orderings annihilate Zm through x^-10",
          (nz(a), nz(b)), ([], []), anchor="normal ordering")
    _, c = normal_ordering_residual(10, correction=False)
    r.add("9.ordering-control", "dropping -hbar y breaks annihilation", bool(nz(c)), True,
          anchor="negative control")
    return r


# --- criterion 10 ---------------------------------------------------------

def criterion_10(d_max=6, workers=1):
    from .dessins import b_big
    from .oracle import (bipartite_double_residuals, calibrate, compositions_upto,
                         dessin_sweep, dessins_brute, dessins_brute_literal,
                         disconnected_brute, exponential_check)
    from .pruned import b_pruned, nb_count
    from .quantum import f_bullet
    r = Report("oracle")
    r.add("10.calibrate", "oracle normalization on B_{0,1}(2), B_{0,3}(1,1,1), N_{0,3}, N_{0,2}",
          calibrate(), True, anchor="oracle calibration")

    def full(values, fn, mu):
        gmax = sum(mu) // 2 + 1
        return {g: v for g, v in values.items() if v} == \
            {g: fn(g, mu) for g in range(gmax + 1) if fn(g, mu)}

    sweep = dessin_sweep(d_max, workers=workers)
    bad = [mu for mu, vals in sweep.items() if not full(vals, b_big, mu)]
    r.add("10.dessins", "permutation count equals B for |mu| <= %d, all genera" % d_max, bad, [],
          anchor="dessin oracle")
    sweep = dessin_sweep(d_max, pruned=True, workers=workers)
    bad = [mu for mu, vals in sweep.items() if not full(vals, b_pruned, mu)]
    r.add("10.pruned", "fixed-point-free count equals b for |mu| <= %d" % d_max, bad, [],
          anchor="pruned oracle")
    bad = [mu for mu in compositions_upto(min(d_max, 4)) if dessins_brute_literal(mu) != dessins_brute(mu)]
    r.add("10.literal", "all-pairs enumeration equals the fixed-face reduction for |mu| <= 4", bad, [],
          anchor="dessin oracle")
    bad = [(v, e) for e in range(1, d_max + 1) for v in range(2 * e + 2)
           if disconnected_brute(v, e) != f_bullet(v, e)]
    r.add("10.disconnected", "disconnected pair count equals f_bullet for e <= %d" % d_max, bad, [],
          anchor="disconnected counts")
    r.add("10.exp", "exponential of connected pair counts gives f_bullet for e <= 5",
          sorted(k for k, v in exponential_check(5).items() if v), [], anchor="exponential formula")
    r.add("10.bipartite", "b_{0,n}(mu) = 2 N_{0,n}(2 mu) for |mu| <= 4",
          sorted(k for k, v in bipartite_double_residuals(4).items() if v), [],
          anchor="bipartite double")
    r.add("10.NB1(1)", "NB_1(1)", nb_count(1, (1,)), Fraction(0), anchor="non-bipartite counts")
    r.add("10.NB1(2)", "NB_1(2)", nb_count(1, (2,)), Fraction(1, 2), anchor="non-bipartite counts")
    bad = [mu for mu in compositions_upto(4) if len(mu) >= 2 and nb_count(0, mu)]
    r.add("10.NB0", "NB_0 vanishes for |mu| <= 4", bad, [], anchor="non-bipartite counts")
    return r


# --- criterion 11 ---------------------------------------------------------

DILATON_CELLS = [(0, 3), (0, 4), (0, 5), (0, 6), (1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)]
STRING_CELLS = [(0, 3), (0, 4), (1, 1), (1, 2), (2, 1)]


def criterion_11():
    from .curves import dilaton_residual, named_curve, string_residual
    r = Report("dilaton-string")
    for name in ("dessin", "airy"):
        c = named_curve(name)
        bad = [gn for gn in DILATON_CELLS if dilaton_residual(c, *gn).terms]
        r.add("11.dilaton-%s" % name, "dilaton residual vanishes on %s for 2g-2+n <= 4" % name,
              bad, [], anchor="dilaton equation")
    reg = named_curve("gauss-regular")
    bad = [(g, n, m) for g, n in STRING_CELLS for m in (0, 1) if string_residual(reg, g, n, m)]
    r.add("11.string-regular", "string residuals vanish on x=z+1/z, y=z", bad, [],
          anchor="string equations")
    witness = string_residual(named_curve("airy"), 1, 1, 0)
    r.add("11.string-witness", "string residual on x=z^2, y=1/z at (1,1), m=0 is nonzero",
          bool(witness), True, anchor="string equations fail")
    r.add("11.witness-value", "witness terms", witness, witness, hard=False,
          anchor="string equations fail")
    return r


# --- criterion 12 ---------------------------------------------------------

def reference_flat_omega03(corrected=True):
    r"""
    Reference expression ``(3 z1^2 z2^2 + 3 z1^2 z3^2 + z2^2 z3^2 - 4 m)/(2 z1^4 z2^4 z3^4)``
    for ``x = z^2, y = z^3``, as terms.  With ``corrected`` the monomial ``m`` is
    ``z1^2 z2 z3`` (the homogeneous reading); otherwise ``z1 z2 z3``.
    """
    h = Fraction(1, 2)
    zero = Fraction(0)

    def key(a, b, c):
        return ((zero, a), (zero, b), (zero, c))
    m = key(2, 3, 3) if corrected else key(3, 3, 3)
    return {key(2, 2, 4): 3 * h, key(2, 4, 2): 3 * h, key(4, 2, 2): h, m: -4 * h}


def criterion_12():
    from .curves import named_curve
    r = Report("asymmetry")
    w = named_curve("flat-counterexample").invariant(0, 3)
    r.add("12.match", "omega^0_3 of x=z^2, y=z^3 equals the reference expression",
          w.terms, reference_flat_omega03(), anchor="flat irregular point")
    r.add("12.asymmetric", "omega^0_3 is not invariant under z1 <-> z2", w.swap_is_invariant(0, 1),
          False, anchor="flat irregular point")
    r.add("12.flagged", "result carries the symmetry flag", "symmetry-not-guaranteed" in w.flags,
          True, anchor="flat irregular point")
    literal = reference_flat_omega03(corrected=False)
    r.add("12.literal", "literal reference monomial z1 z2 z3 is inhomogeneous; computed term differs",
          w.terms == literal, False, hard=False, anchor="flat irregular point")
    return r


# --- criterion 13 ---------------------------------------------------------

def criterion_13(max_size=4):
    from .dessins import euler_char_probe
    from .oracle import bound_probe
    r = Report("probes")
    for g in (1, 2, 3):
        lhs, rhs = euler_char_probe(g)
        r.add("13.zeta(%d)" % g, "B_{%d,1}(0) against zeta(1-2g)" % g, lhs, rhs, hard=False,
              anchor="orbifold Euler characteristic")
    rows = bound_probe(max_size)
    viol = [(g, mu) for g, mu, b, m2 in rows if b > m2]
    r.add("13.bound", "B_{g,n}(mu) <= 2 M_{g,n}(2 mu) for |mu| <= %d (%d cells)"
          % (max_size, len(rows)), viol, [], hard=False, anchor="fatgraph bound")
    return r


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
            11: criterion_11, 12: criterion_12, 13: criterion_13}

SUITES = {
    "main-theorem": [2],
    "three-term": [1, 3],
    "structure": [4, 13],
    "pruned": [5],
    "one-point": [6, 7],
    "volumes": [8],
    "quantum": [9],
    "oracle": [10],
    "dilaton-string": [11, 12],
}
SUITES["all"] = sorted(CRITERIA)


def run_criterion(k, **kw):
    t = time.perf_counter()
    rep = CRITERIA[k](**kw)
    rep.seconds[k] = time.perf_counter() - t
    return rep


def run_suite(name, d_max=6, workers=1):
    if name not in SUITES:
        raise KeyError(name)
    rep = Report(name)
    for k in SUITES[name]:
        kw = {"d_max": d_max, "workers": workers} if k == 10 else {}
        rep.extend(run_criterion(k, **kw))
    return rep
