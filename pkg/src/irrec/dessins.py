"""Counts of dessins d'enfant: recursions, closed forms, structure polynomials.

``U_g(mu) = mu_1 ... mu_n B_{g,n}(mu)`` where ``B_{g,n}(mu)`` is the weighted
count of connected genus-g dessins with n labelled faces of perimeters
``2 mu_1, ..., 2 mu_n``.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .algebra import MPoly, Poly, interpolate_grid
from .memo import CountTable

_U = CountTable("U")


def _u(g, parts):
    """U_g on an arbitrary tuple of parts (zeros allowed), as an int."""
    if g < 0:
        return 0
    if 0 in parts:
        return 1 if (g == 0 and parts == (0,)) else 0
    v = _U.get(g, parts)
    if v is None:
        mu = tuple(sorted(parts, reverse=True))
        v = _U.put(g, mu, _u_step(g, mu))
    return v


def _u_step(g, mu):
    """One application of the cut-and-join recursion with mu[0] distinguished."""
    m1, rest = mu[0], mu[1:]
    k = len(rest)
    total = 0
    for j in range(k):
        total += rest[j] * _u(g, (m1 + rest[j] - 1,) + rest[:j] + rest[j + 1:])
    splits = []
    for mask in range(1 << k):
        I = tuple(rest[t] for t in range(k) if mask >> t & 1)
        J = tuple(rest[t] for t in range(k) if not mask >> t & 1)
        splits.append((I, J))
    for i in range(m1):
        j = m1 - 1 - i
        if g >= 1 and i and j:
            total += _u(g - 1, (i, j) + rest)
        for I, J in splits:
            for g1 in range(g + 1):
                a = _u(g1, (i,) + I)
                if a:
                    total += a * _u(g - g1, (j,) + J)
    return total


def u_count(g, mu):
    r"""
    ``U_g(mu)`` from the cut-and-join recursion.

    Any zero part gives 0, except the base value ``U_0(0) = 1``.

    >>> u_count(0, (3,))
    Fraction(5, 1)
    """
    return Fraction(_u(g, tuple(int(m) for m in mu)))


def u_count_raw(g, mu):
    """Apply the recursion once with ``mu[0]`` as the distinguished part.

    Sub-terms come from the memo table; this exposes the symmetry of the
    recursion to testing.
    """
    mu = tuple(int(m) for m in mu)
    if g < 0 or 0 in mu:
        return u_count(g, mu)
    return Fraction(_u_step(g, mu))


def b_big(g, mu):
    """``B_{g,n}(mu) = U_g(mu) / prod(mu)``; parts must be positive."""
    mu = tuple(int(m) for m in mu)
    if not mu or min(mu) < 1:
        raise ValueError("B_{g,n} needs positive parts; use evaluate_zero_insertions")
    return Fraction(_u(g, mu), prod(mu))


def catalan(m):
    return Fraction(comb(2 * m, m), m + 1)


@lru_cache(maxsize=None)
def three_term_u(g, n):
    """One-face counts ``U_g(n)`` from the three-term recursion."""
    if g < 0 or n < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1 if g == 0 else 0)
    rhs = 2 * (2 * n - 1) * three_term_u(g, n - 1)
    if n >= 2:
        rhs += (n - 1) ** 2 * (n - 2) * three_term_u(g - 1, n - 2)
    return rhs / (n + 1)


@lru_cache(maxsize=None)
def epsilon_hz(g, n):
    """Harer-Zagier one-face fatgraph counts ``eps_g(n)``."""
    if g < 0 or n < 0:
        return Fraction(0)
    if n == 0:
        return Fraction(1 if g == 0 else 0)
    rhs = 2 * (2 * n - 1) * epsilon_hz(g, n - 1)
    if n >= 2:
        rhs += (n - 1) * (2 * n - 1) * (2 * n - 3) * epsilon_hz(g - 1, n - 2)
    return rhs / (n + 1)


def binom_poly(k, var="z"):
    """binom(z, k) as a polynomial in z."""
    p = Poly([1], var)
    for i in range(k):
        p = p * Poly([-i, 1], var)
    return p * Fraction(1, factorial(k))


def jackson_poly(n):
    """``G_n(z) = sum_g U_g(n) z^(n+1-2g)`` via the binomial formula."""
    out = Poly([], "z")
    for r in range(n):
        for s in range(n - r):
            mult = factorial(n - 1) // (factorial(r) * factorial(s) * factorial(n - 1 - r - s))
            out = out + binom_poly(r + 1) * binom_poly(s + 1) * mult
    return out * factorial(n)


def hz_poly(n):
    """``F_n(z) = sum_g eps_g(n) z^(n+1-2g)``."""
    out = Poly([], "z")
    for r in range(n + 1):
        out = out + binom_poly(r + 1) * (2 ** r * comb(n, r))
    return out * Fraction(factorial(2 * n), 2 ** n * factorial(n))


def genus0_closed(mu):
    """Closed form for ``B_{0,n}``; polynomial in the parts when n >= 3."""
    mu = tuple(int(m) for m in mu)
    n, total = len(mu), sum(mu)
    binoms = prod(comb(2 * m, m) for m in mu)
    if n == 1:
        return Fraction(binoms, mu[0] * (mu[0] + 1))
    if n == 2:
        return Fraction(binoms, 2 * total)
    falling = prod(total - k for k in range(1, n - 2))
    return Fraction(falling * binoms, 2 ** (n - 1))


def c_factor(g, m):
    """``c_g(m) = binom(2m, m) 2^-g prod_{k=1..g} 1/(2m-2k+1)``, any m >= 0."""
    out = Fraction(comb(2 * m, m), 2 ** g)
    for k in range(1, g + 1):
        out /= 2 * m - 2 * k + 1
    return out


class StructureError(ArithmeticError):
    pass


_STRUCT = {}


def structure_degree(g, n):
    return 3 * g - 3 + n + n * g


def structure_polynomial(g, n):
    r"""
    The polynomial ``p_{g,n}`` with ``B_{g,n}(mu) = p_{g,n}(mu) prod c_g(mu_i)``.

    Found by tensor-grid interpolation on ``mu_i in {g+1, ..., g+D+1}`` and
    checked on points outside the grid.

    >>> structure_polynomial(0, 3)
    MPoly(1/4)
    """
    if 2 * g - 2 + n <= 0:
        raise ValueError("structure polynomial needs 2g-2+n > 0")
    if (g, n) in _STRUCT:
        return _STRUCT[(g, n)]
    D = structure_degree(g, n)
    nodes = [list(range(g + 1, g + D + 2))] * n

    def ratio(mu):
        return b_big(g, mu) / prod(c_factor(g, m) for m in mu)

    p = interpolate_grid(ratio, nodes)
    if p.degree() > D:
        raise StructureError("degree %d exceeds bound %d" % (p.degree(), D))
    for k in range(1, max(D, 2) + 1):
        pt = tuple(g + D + 1 + k if i == 0 else g + 1 + (k + i) % (D + 1) for i in range(n))
        if p(*pt) != ratio(pt):
            raise StructureError("held-out check failed at %s" % (pt,))
    _STRUCT[(g, n)] = p
    return p


def b_big_extended(g, mu):
    """``B_{g,n}`` continued to zero parts through the structure polynomial."""
    mu = tuple(int(m) for m in mu)
    if min(mu) >= 1:
        return b_big(g, mu)
    p = structure_polynomial(g, len(mu))
    return p(*mu) * prod(c_factor(g, m) for m in mu)


def evaluate_zero_insertions(g, n, m, mu):
    """``B_{g,n+m}(mu, 0, ..., 0)`` from repeated zero insertion.

    Each insertion multiplies by ``(|mu| - 2g + 2 - n')/2``, with n' the
    current number of parts.
    """
    mu = tuple(int(x) for x in mu)
    if len(mu) != n or min(mu) < 1:
        raise ValueError("mu must have n positive parts")
    val = b_big(g, mu)
    total = sum(mu)
    for k in range(m):
        val *= Fraction(total - 2 * g + 2 - (n + k), 2)
    return val


def divisor_dilaton_residuals(g, n, mu):
    """Residuals of the divisor and dilaton identities for ``B``.

    The zero-part value ``B_{g,n+1}(0, mu)`` comes from the structure
    polynomial, independently of the zero-insertion relation.
    """
    mu = tuple(int(x) for x in mu)
    total = sum(mu)
    b_one = b_big(g, (1,) + mu)
    b_zero = b_big_extended(g, (0,) + mu)
    b_base = b_big(g, mu)
    divisor = b_one - total * b_base
    dilaton = b_one - b_zero - Fraction(total + 2 * g - 2 + n, 2) * b_base
    return divisor, dilaton


@lru_cache(maxsize=None)
def bernoulli(n):
    """Bernoulli numbers with B_1 = -1/2."""
    if n == 0:
        return Fraction(1)
    return -sum(comb(n + 1, k) * bernoulli(k) for k in range(n)) / (n + 1)


def euler_char_probe(g):
    """``(B_{g,1}(0), zeta(1-2g))``; a comparison reported, never enforced."""
    p = structure_polynomial(g, 1)
    lhs = p(0) * c_factor(g, 0)
    rhs = -bernoulli(2 * g) / (2 * g)
    return lhs, rhs


def appendix_row(g, n):
    """Reference table entry for ``B_{g,n}/prod c_g`` as a callable, or None."""
    rows = {
        (0, 1): lambda m: Fraction(1, m[0] * (m[0] + 1)),
        (0, 2): lambda m: Fraction(1, 2 * (m[0] + m[1])),
        (0, 3): lambda m: Fraction(1, 4),
        (1, 1): lambda m: Fraction((m[0] - 1) * (m[0] - 2), 12),
        (1, 2): lambda m: Fraction(
            2 * m[0] ** 2 * m[1] ** 2 + 2 * m[0] ** 3 * m[1] + 2 * m[0] * m[1] ** 3
            - m[0] ** 3 - m[1] ** 3 - 9 * m[0] ** 2 * m[1] - 9 * m[0] * m[1] ** 2
            + 4 * m[0] ** 2 + 4 * m[1] ** 2 + 14 * m[0] * m[1] - 5 * m[0] - 5 * m[1] + 2, 12),
        (2, 1): lambda m: Fraction(prod(m[0] - k for k in range(1, 5))
                                   * (5 * m[0] ** 2 - 7 * m[0] + 6), 1440),
        (3, 1): lambda m: Fraction(prod(m[0] - k for k in range(1, 7))
                                   * (35 * m[0] ** 4 - 182 * m[0] ** 3 + 397 * m[0] ** 2
                                      - 346 * m[0] + 240), 362880),
    }
    if (g, n) in rows:
        return rows[(g, n)]
    if g == 0 and n >= 3:
        return lambda m: Fraction(prod(sum(m) - k for k in range(1, n - 2)), 2 ** (n - 1))
    return None


def catalan_series_residual(K):
    """Coefficients of ``x y^2 - x y + 1`` for ``y = sum U_0(m) x^(-m-1)``,
    listed for ``x^0, x^-1, ..., x^-K``."""
    c = [u_count(0, (m,)) if m else Fraction(1) for m in range(K + 2)]
    out = [1 - c[0]]
    for k in range(1, K + 1):
        out.append(sum(c[i] * c[k - 1 - i] for i in range(k)) - c[k])
    return out


def mpoly_from_callable(f, n, nodes):
    return interpolate_grid(f, [nodes] * n)


__all__ = [
    "u_count", "u_count_raw", "b_big", "b_big_extended", "catalan", "three_term_u",
    "epsilon_hz", "jackson_poly", "hz_poly", "binom_poly", "genus0_closed", "c_factor",
    "structure_polynomial", "structure_degree", "evaluate_zero_insertions",
    "divisor_dilaton_residuals", "euler_char_probe", "bernoulli", "appendix_row",
    "catalan_series_residual", "StructureError", "MPoly",
]
