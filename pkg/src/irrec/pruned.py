"""Pruned dessins: two recursions, tree gluing, quasi-polynomial structure.

``b_{g,n}(mu)`` counts dessins without valence-one vertices.  Both
recursions start from ``b_{0,2}(m1, m2) = delta(m1, m2)/m1`` and
``b_{0,3} = 2``; ``b_{1,1}`` comes from the symmetric recursion fed by
``b_{0,2}``.
"""
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod

from .algebra import MPoly, interpolate_grid
from .dessins import b_big
from .memo import CountTable

_B_SYM = CountTable("b")
_B_ASYM = CountTable("b-asym", symmetric=False)


def _base(g, mu):
    """Base values, or None when the recursion applies."""
    n = len(mu)
    if g < 0 or n == 0 or min(mu) < 1:
        return Fraction(0)
    if (g, n) == (0, 1):
        return Fraction(0)
    if (g, n) == (0, 2):
        return Fraction(1, mu[0]) if mu[0] == mu[1] else Fraction(0)
    if (g, n) == (0, 3):
        return Fraction(2)
    return None


def _stable(g, n):
    return 2 * g - 2 + n > 0


def _splits(items):
    k = len(items)
    for mask in range(1 << k):
        yield ([items[t] for t in range(k) if mask >> t & 1],
               [items[t] for t in range(k) if not mask >> t & 1])


def _pqr(m):
    for p in range(1, m - 1):
        for q in range(1, m - p):
            yield p, q, m - p - q


def _loop_terms(b, g, mi, rest):
    """Sum over p + q + r = mi of pqr [b_{g-1}(p, q, rest) + stable products]."""
    total = Fraction(0)
    split_list = list(_splits(list(rest)))
    for p, q, r in _pqr(mi):
        w = p * q * r
        acc = b(g - 1, (p, q) + tuple(rest)) if g >= 1 else Fraction(0)
        for I, J in split_list:
            for g1 in range(g + 1):
                g2 = g - g1
                if not (_stable(g1, len(I) + 1) and _stable(g2, len(J) + 1)):
                    continue
                x = b(g1, (p,) + tuple(I))
                if x:
                    acc += x * b(g2, (q,) + tuple(J))
        total += w * acc
    return total


def b_pruned(g, mu):
    r"""
    ``b_{g,n}(mu)`` from the symmetric recursion.

    >>> b_pruned(1, (3,))
    Fraction(1, 3)
    """
    mu = tuple(int(m) for m in mu)
    v = _base(g, mu)
    if v is not None:
        return v
    v = _B_SYM.get(g, mu)
    if v is None:
        v = _B_SYM.put(g, mu, _sym_step(g, tuple(sorted(mu, reverse=True))))
    return v


def _sym_step(g, mu):
    n = len(mu)
    if (g, n) == (1, 1):
        # the general loop term with b_{0,2}(p, q) = delta(p, q)/p
        m = mu[0]
        return Fraction(sum(p * (m - 2 * p) for p in range(1, (m - 1) // 2 + 1)), m)
    total = Fraction(0)
    for i in range(n):
        rest = mu[:i] + mu[i + 1:]
        total += _loop_terms(b_pruned, g, mu[i], rest)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            others = tuple(mu[k] for k in range(n) if k not in (i, j))
            s = mu[i] + mu[j]
            for p in range(1, s):
                total += p * (s - p) * b_pruned(g, (p,) + others)
    return total / sum(mu)


def _sign(x):
    return (x > 0) - (x < 0)


def b_pruned_asym(g, mu):
    """``b_{g,n}(mu)`` from the asymmetric recursion in the first part."""
    mu = tuple(int(m) for m in mu)
    v = _base(g, mu)
    if v is not None:
        return v
    if (g, len(mu)) == (1, 1):
        return b_pruned(1, mu)
    v = _B_ASYM.get(g, mu)
    if v is None:
        v = _B_ASYM.put(g, mu, _asym_step(g, mu))
    return v


def _asym_step(g, mu):
    m1, S = mu[0], mu[1:]
    total = _loop_terms(b_pruned_asym, g, m1, S)
    for i in range(len(S)):
        def with_p(p):
            return b_pruned_asym(g, S[:i] + (p,) + S[i + 1:])
        s = m1 + S[i]
        for p in range(1, s):
            total += p * (s - p) * with_p(p)
        d = abs(m1 - S[i])
        sg = _sign(m1 - S[i])
        if sg:
            for p in range(1, d):
                total += sg * p * (d - p) * with_p(p)
    return total / m1


def glue_coefficient(b, k):
    """``C_k^b = b/(b+k) binom(b-1+2k, k)``: ways to glue k tree edges to a
    boundary of length b."""
    if k == 0:
        return Fraction(1)
    return Fraction(b, b + k) * comb(b - 1 + 2 * k, k)


def tree_glue_transform(g, mu):
    r"""
    ``B_{g,n}(mu)`` assembled from pruned counts by regrowing trees:
    ``sum_k b_{g,n}(mu - k) prod C^{2(mu_i - k_i)}_{k_i}``.
    """
    mu = tuple(int(m) for m in mu)
    if (g, len(mu)) == (0, 1):
        raise ValueError("(0,1) has no pruned seed")
    total = Fraction(0)
    for ks in product(*[range(m) for m in mu]):
        nu = tuple(m - k for m, k in zip(mu, ks))
        v = b_pruned(g, nu)
        if v:
            total += v * prod(glue_coefficient(2 * n_, k) for n_, k in zip(nu, ks))
    return total


def pruned_table_row(g, n):
    """Reference table entries as callables on mu (None if absent)."""
    def eo(m):
        return m % 2
    rows = {
        (0, 1): lambda m: Fraction(0),
        (0, 2): lambda m: Fraction(1, m[0]) if m[0] == m[1] else Fraction(0),
        (0, 3): lambda m: Fraction(2),
        (0, 4): lambda m: Fraction(sum(x * x for x in m) - 1),
        (1, 1): lambda m: Fraction(m[0] ** 2 - (1 if eo(m[0]) else 4), 24),
        (1, 2): lambda m: (Fraction((m[0] ** 2 + m[1] ** 2 - 1) * (m[0] ** 2 + m[1] ** 2 - 5), 48)
                           if eo(sum(m)) else
                           Fraction((m[0] ** 2 + m[1] ** 2 - 2) * (m[0] ** 2 + m[1] ** 2 - 4), 48)),
        (2, 1): lambda m: (Fraction((m[0] ** 2 - 1) * (m[0] ** 2 - 9)
                                    * (5 * m[0] ** 4 - 88 * m[0] ** 2 + 227), 276480)
                           if eo(m[0]) else
                           Fraction((m[0] ** 2 - 4) * (m[0] ** 2 - 16)
                                    * (5 * m[0] ** 4 - 38 * m[0] ** 2 + 72), 276480)),
    }
    return rows.get((g, n))


class QuasiPolynomial:
    r"""
    Quasi-polynomial modulo 2: one polynomial in ``mu_1^2, ..., mu_n^2`` per
    parity class ``(mu_1 mod 2, ..., mu_n mod 2)``.
    """

    def __init__(self, n, classes, degree):
        self.n = n
        self.classes = dict(classes)
        self.degree = degree

    def __call__(self, *mu):
        cls = tuple(m % 2 for m in mu)
        return self.classes[cls](*[m * m for m in mu])

    def is_symmetric(self):
        from itertools import permutations
        for perm in permutations(range(self.n)):
            for cls, p in self.classes.items():
                other = self.classes[tuple(cls[perm[i]] for i in range(self.n))]
                if other != p.permute(perm):
                    return False
        return True

    def leading_coefficient(self, exps, cls=None):
        """Coefficient of ``prod mu_i^(2 a_i)``; equal across classes in top degree."""
        cls = cls if cls is not None else (1,) * self.n
        return self.classes[cls].coefficient(exps)

    def character_part(self, subset):
        """Polynomial multiplying ``(-1)^(sum_{i in subset} mu_i)``."""
        out = None
        for cls, p in self.classes.items():
            sign = (-1) ** sum(cls[i] for i in subset)
            t = p * Fraction(sign, 2 ** self.n)
            out = t if out is None else out + t
        return out

    def __repr__(self):
        return "QuasiPolynomial(n=%d, %s)" % (self.n, {k: v.pretty() for k, v in self.classes.items()})


class FitError(ArithmeticError):
    pass


def fit_quasipolynomial(f, n, degree, min_value=1, holdout=2):
    """Fit ``f(mu)`` per parity class by interpolation in squared variables.

    Nodes for a class are the smallest ``degree + 1`` admissible values per
    variable; each class is verified on ``holdout`` extra points per variable.
    """
    classes = {}
    for cls in product((0, 1), repeat=n):
        nodes = []
        for c in cls:
            start = min_value if min_value % 2 == c else min_value + 1
            nodes.append([start + 2 * i for i in range(degree + 1)])
        p = interpolate_grid(lambda mu: f(mu), nodes, transform=lambda m: m * m)
        p.names = tuple("m%d^2" % (i + 1) for i in range(n))
        for var in range(n):
            for h in range(1, holdout + 1):
                pt = [nd[(var + h) % len(nd)] for nd in nodes]
                pt[var] = nodes[var][-1] + 2 * h
                if p(*[m * m for m in pt]) != f(tuple(pt)):
                    raise FitError("held-out mismatch at %s" % (pt,))
        classes[cls] = p
    return QuasiPolynomial(n, classes, degree)


def _solve_exact(rows, rhs):
    """Solve an overdetermined exact system; None if inconsistent, FitError if
    the unknowns are not determined."""
    m = len(rows[0])
    aug = [list(r) + [v] for r, v in zip(rows, rhs)]
    piv_row = 0
    pivots = []
    for col in range(m):
        sel = next((r for r in range(piv_row, len(aug)) if aug[r][col]), None)
        if sel is None:
            continue
        aug[piv_row], aug[sel] = aug[sel], aug[piv_row]
        lead = aug[piv_row][col]
        aug[piv_row] = [v / lead for v in aug[piv_row]]
        for r in range(len(aug)):
            if r != piv_row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[piv_row])]
        pivots.append(col)
        piv_row += 1
    if len(pivots) < m:
        raise FitError("insufficient sample points")
    if any(aug[r][m] for r in range(piv_row, len(aug))):
        return None
    return [aug[i][m] for i in range(m)]


def fit_quasipolynomial_points(values, n, degree):
    """Fit from sampled values ``{mu: value}`` of a symmetric function.

    Each class polynomial has total degree <= ``degree`` in the squares.
    Samples are symmetrized, so a class and its permuted images share data.
    Surplus samples act as held-out checks.
    """
    from itertools import permutations
    from itertools import combinations_with_replacement as cwr
    monos = []
    for d in range(degree + 1):
        for combo in cwr(range(n), d):
            monos.append(tuple(combo.count(i) for i in range(n)))
    samples = {}
    for mu, v in values.items():
        for perm in permutations(range(n)):
            samples[tuple(mu[i] for i in perm)] = v
    classes = {}
    for cls in product((0, 1), repeat=n):
        pts = sorted(mu for mu in samples if tuple(m % 2 for m in mu) == cls)
        if not pts:
            raise FitError("insufficient sample points")
        rows = [[prod(Fraction(m * m) ** e for m, e in zip(mu, mono)) for mono in monos]
                for mu in pts]
        sol = _solve_exact(rows, [Fraction(samples[mu]) for mu in pts])
        if sol is None:
            raise FitError("samples in class %s are not fitted by degree %d" % (cls, degree))
        classes[cls] = MPoly(n, dict(zip(monos, sol)), tuple("m%d^2" % (i + 1) for i in range(n)))
    return QuasiPolynomial(n, classes, degree)


def nb_quasipolynomial(g, n, max_edges, fatgraph_count=None):
    """Fit ``NB_g`` in n variables from oracle values with ``|mu| <= max_edges``."""
    from .oracle import compositions_upto
    values = {}
    for mu in compositions_upto(max_edges):
        if len(mu) == n and list(mu) == sorted(mu):
            values[mu] = nb_count(g, mu, fatgraph_count)
    return fit_quasipolynomial_points(values, n, 3 * g - 3 + n)


def quasipoly_fit(g, n):
    """Fitted ``b_{g,n}`` as a quasi-polynomial of degree 3g-3+n in squares."""
    if not _stable(g, n):
        raise ValueError("unstable (g, n)")
    return fit_quasipolynomial(lambda mu: b_pruned(g, mu), n, 3 * g - 3 + n)


def psi_leading_check(g, n, exps, intersection):
    """Top coefficient of ``b_{g,n}`` minus ``2^(1-g)/prod a_i! * intersection``."""
    if sum(exps) != 3 * g - 3 + n:
        raise ValueError("exponents must sum to 3g-3+n")
    q = quasipoly_fit(g, n)
    coef = q.leading_coefficient(tuple(exps))
    predicted = Fraction(intersection) / prod(factorial(a) for a in exps) / Fraction(2) ** (g - 1)
    return coef - predicted


class PMinusPart:
    """Polynomial part multiplying ``(-1)^|mu|``.

    ``coefficient`` is the literal coefficient; ``value`` is twice it, the
    normalization in which a quasi-polynomial written with
    ``-c * eps(|mu|)``, ``eps(m) = (1 - (-1)^m)/2``, has ``p^- = c``.
    """

    def __init__(self, coefficient, g=None, n=None):
        self.coefficient = coefficient
        self.value = coefficient * 2
        self.g, self.n = g, n

    def __repr__(self):
        return "PMinusPart(%s)" % self.value.pretty()


def p_minus_extract(q, g=None):
    return PMinusPart(q.character_part(range(q.n)), g, q.n)


def nb_count(g, mu, fatgraph_count=None):
    """``NB_g(mu) = 2 N_{g,n}(2 mu) - b_{g,n}(mu)`` with N from the oracle."""
    if fatgraph_count is None:
        from .oracle import fatgraphs_brute
        fatgraph_count = fatgraphs_brute
    mu = tuple(int(m) for m in mu)
    return 2 * fatgraph_count(tuple(2 * m for m in mu), pruned=True, genus=g) - b_pruned(g, mu)


def pruned_series_residual(g, n, order):
    """Coefficients of ``sum b z^nu - sum B x^-mu`` at ``x = z + 1/z + 2``.

    Both sides are expanded at z = 0 through ``z_i^order``; returns the
    nonzero residual coefficients (empty when the identity holds).
    """
    from .algebra import RatFunc, series_expand
    z = RatFunc.gen()
    inv_x = series_expand(1 / (z + 1 / z + 2), 0, order)
    pw = [None, inv_x]
    for k in range(2, order + 1):
        pw.append(pw[-1] * inv_x)
    out = {}
    for nu in product(range(1, order + 1), repeat=n):
        out[nu] = b_pruned(g, nu) if (g, n) != (0, 2) else Fraction(int(nu[0] == nu[1]), nu[0])
    for mu in product(range(1, order + 1), repeat=n):
        bmu = b_big(g, mu)
        if not bmu:
            continue
        partial = {(): bmu}
        for m in mu:
            nxt = {}
            for e, v in partial.items():
                for k in range(m, order + 1):
                    c = pw[m][k]
                    if c:
                        nxt[e + (k,)] = nxt.get(e + (k,), 0) + v * c
            partial = nxt
        for e, v in partial.items():
            out[e] = out.get(e, 0) - v
    return {k: v for k, v in out.items() if v}


__all__ = [
    "b_pruned", "b_pruned_asym", "tree_glue_transform", "glue_coefficient", "QuasiPolynomial",
    "fit_quasipolynomial", "quasipoly_fit", "psi_leading_check", "PMinusPart", "p_minus_extract",
    "nb_count", "nb_quasipolynomial", "fit_quasipolynomial_points", "pruned_table_row", "pruned_series_residual", "FitError", "MPoly",
]
