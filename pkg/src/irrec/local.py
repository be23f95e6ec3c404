"""The local irregular curve ``x y^2 = 1``: coefficients, one-point
invariants and volume polynomials.

Two normalizations occur.  ``HALF`` is ``x = z^2/2, y = 1/z``, in which the
coefficient table ``u_g(mu)`` has few powers of 2; ``FULL`` is
``x = z^2, y = 1/z``.  Rescaling ``y dx`` by ``lam`` rescales ``omega^g_n`` by
``lam^(2-2g-n)``, so ``u^FULL = 2^(2-2g-n) u^HALF``.
"""
from fractions import Fraction
from math import comb, factorial, prod

from .algebra import MPoly
from .memo import CountTable

HALF = "x=z^2/2"
FULL = "x=z^2"

# Contact with omega^0_2: the only nonzero genus-0 value entering the
# recursion, fixed once by u_1(1) = 1/8.
U_SEED = Fraction(1, 4)

_U = CountTable("u-local")


def _u(g, mu):
    if g < 0:
        return Fraction(0)
    if g == 0:
        return U_SEED if mu == (0, 0) else Fraction(0)
    if any(m % 2 == 0 for m in mu):
        return Fraction(0)
    v = _U.get(g, mu)
    if v is None:
        key = tuple(sorted(mu, reverse=True))
        v = _U.put(g, key, _u_step(g, key))
    return v


def _u_step(g, mu):
    m1, S = mu[0], mu[1:]
    k = len(S)
    total = Fraction(0)
    for j in range(k):
        total += S[j] * _u(g, (m1 + S[j] - 1,) + S[:j] + S[j + 1:])
    splits = []
    for mask in range(1 << k):
        splits.append((tuple(S[t] for t in range(k) if mask >> t & 1),
                       tuple(S[t] for t in range(k) if not mask >> t & 1)))
    half = Fraction(0)
    for i in range(m1):
        j = m1 - 1 - i
        half += _u(g - 1, (i, j) + S)
        for I, J in splits:
            for g1 in range(1, g):
                a = _u(g1, (i,) + I)
                if a:
                    half += a * _u(g - g1, (j,) + J)
    return total + half / 2


def u_airy_rec(g, mu, tag=HALF):
    r"""
    Coefficient ``u_g(mu)`` of ``prod dz_i / z_i^(mu_i + 1)`` in ``omega^g_n``.

    >>> u_airy_rec(2, (3,))
    Fraction(9, 128)
    """
    mu = tuple(int(m) for m in mu)
    if not mu or min(mu) < 1 or g < 1:
        return Fraction(0)
    v = _u(g, mu)
    if tag == FULL:
        v *= Fraction(2) ** (2 - 2 * g - len(mu))
    elif tag != HALF:
        raise ValueError("unknown normalization %r" % (tag,))
    return v


def odd_partitions(total, n):
    """Tuples of n odd positive parts, non-increasing, summing to ``total``."""
    def rec(left, k, cap):
        if k == 0:
            if left == 0:
                yield ()
            return
        for p in range(min(cap, left - (k - 1)), 0, -1):
            if p % 2:
                for rest in rec(left - p, k - 1, p):
                    yield (p,) + rest
    return list(rec(total, n, total))


def u_table(g, n, tag=HALF):
    """Nonzero ``u_g`` on sorted odd partitions of ``2g - 2 + n``."""
    return {mu: u_airy_rec(g, mu, tag) for mu in odd_partitions(2 * g - 2 + n, n)}


def reference_u_row(g, n):
    """Reference low-genus rows, as ``{sorted mu: value}``."""
    f = factorial
    ones = (1,) * (n - 1)
    if g == 1:
        return {(1,) * n: Fraction(f(n - 1), 8)}
    if g == 2:
        return {(3,) + ones: Fraction(3 * f(n + 1), 2 ** 8)}
    if g == 3:
        row = {(5,) + ones: Fraction(75 * f(n + 3), 2 ** 13)}
        if n >= 2:
            row[(3, 3) + (1,) * (n - 2)] = Fraction(189, 5) * f(n + 3) / 2 ** 12
        return row
    return None


def displayed_u2(n):
    """``u_2(3, 1, ..., 1)`` read off the displayed ``omega^2_n``."""
    return Fraction(9 * factorial(n + 1), 2 ** 8)


def one_point_closed(g):
    """Coefficient of ``z^(-2g) dz`` in ``omega^g_1`` for ``x = z^2, y = 1/z``;
    ``g = 0`` returns the initial value ``-2`` of the one-point ODE."""
    if g == 0:
        return Fraction(-2)
    return Fraction(2 * factorial(2 * g) ** 3, 2 ** (8 * g) * factorial(g) ** 4 * (2 * g - 1))


def one_point_ode_rec(g):
    """Same coefficient from ``-2g a_g = -(2g-3)(2g-1)^2 a_{g-1}/16``, ``a_0 = -2``."""
    a = Fraction(-2)
    for h in range(1, g + 1):
        a = a * (2 * h - 3) * (2 * h - 1) ** 2 / (32 * h)
    return a


def airy_one_point(g):
    """Coefficient of ``z^(2-6g) dz`` in ``omega^g_1`` of the Airy curve ``x = y^2``."""
    return Fraction(2 ** 3 * factorial(6 * g - 3),
                    2 ** (8 * g) * 3 ** g * factorial(g) * factorial(3 * g - 2))


def airy_one_point_psi(g, psi_integral):
    """Second form ``2^(1-2g) (6g-3)!! <tau_{3g-2}>``."""
    dfact = prod(range(6 * g - 3, 0, -2))
    return Fraction(dfact, 2 ** (2 * g - 1)) * Fraction(psi_integral)


def scaled_one_point(g):
    """``x = z^2/2`` one-point coefficient predicted from the closed form."""
    return Fraction(2) ** (2 * g - 1) * one_point_closed(g)


def _lnames(n):
    return tuple("L%d" % (i + 1) for i in range(n))


def volumes(g, n):
    r"""
    ``V_g(L_1, ..., L_n)`` with ``u_g(mu) = prod mu_i! [prod L_i^(mu_i - 1)] V_g``.

    >>> volumes(2, 1)
    MPoly(3/256*L1^2)
    """
    from itertools import permutations
    terms = {}
    for mu, val in u_table(g, n).items():
        w = val / prod(factorial(m) for m in mu)
        for perm in set(permutations(mu)):
            terms[tuple(m - 1 for m in perm)] = w
    return MPoly(n, terms, _lnames(n))


def laplace_coefficients(V):
    """Apply ``L(L^2k) = (2k+1)!/z^(2k+2)``: returns ``{mu: u}`` with ``mu_i = 2k_i + 1``."""
    out = {}
    for e, c in V.terms.items():
        if any(k % 2 for k in e):
            raise ValueError("volume has an odd power")
        out[tuple(k + 1 for k in e)] = c * prod(factorial(k + 1) for k in e)
    return out


def _embed(V, m, images):
    """Compose V with given MPoly images living in an m-variable ring."""
    if V.nvars == 0:
        return MPoly.const(V.terms.get((), 0), m)
    return V.compose(images)


def volume_recursion_residual(g, n):
    """LHS minus RHS of the volume recursion in ``L_1`` as a polynomial."""
    m = n + 1                         # L_1..L_n and the integration variable x
    gens = MPoly.gens(m, _lnames(n) + ("x",))
    L, x = gens[:n], gens[n]
    S = list(range(1, n))
    lhs = 2 * L[0] * _embed(volumes(g, n), m, L)
    rhs = MPoly(m, {}, gens[0].names)
    for j in S:
        others = [L[t] for t in S if t != j]
        Vg = volumes(g, n - 1)
        plus, minus = L[j] + L[0], L[j] - L[0]
        rhs = rhs + plus * _embed(Vg, m, [plus] + others) - minus * _embed(Vg, m, [minus] + others)
    y = L[0] - x
    inner = MPoly(m, {}, gens[0].names)
    if g >= 2:
        inner = inner + _embed(volumes(g - 1, n + 1), m, [x, y] + [L[t] for t in S])
    for mask in range(1 << len(S)):
        I = [S[t] for t in range(len(S)) if mask >> t & 1]
        J = [S[t] for t in range(len(S)) if not mask >> t & 1]
        for g1 in range(1, g):
            inner = inner + (_embed(volumes(g1, len(I) + 1), m, [x] + [L[t] for t in I])
                             * _embed(volumes(g - g1, len(J) + 1), m, [y] + [L[t] for t in J]))
    anti = (x * y * inner).antiderivative(n)
    upper = anti.compose(L + [L[0]])
    lower = anti.compose(L + [MPoly(m, {}, gens[0].names)])
    rhs = rhs + upper - lower
    return lhs - rhs


def volume_dilaton_residual(g, n):
    """``V_g(L, 0) - (2g - 2 + n) V_g(L)``."""
    big = volumes(g, n + 1)
    gens = MPoly.gens(n, _lnames(n)) if n else []
    zero = MPoly(n, {}, _lnames(n))
    restricted = big.compose(gens + [zero]) if n else MPoly.const(big(0), 0)
    return restricted - volumes(g, n) * (2 * g - 2 + n)


def volume_top_coeff_check(g, n=1):
    """Coefficient of ``L_1^(2g-2)`` minus ``2^(2-6g) binom(2g,g) (2g-3+n)!/(g-1)!^2``."""
    V = volumes(g, n)
    coef = V.coefficient((2 * g - 2,) + (0,) * (n - 1))
    predicted = Fraction(comb(2 * g, g) * factorial(2 * g - 3 + n),
                         factorial(g - 1) ** 2) / Fraction(2) ** (6 * g - 2)
    return coef - predicted


def reference_volume(g, n):
    """Reference closed forms for ``V_1, V_2, V_3``."""
    gens = MPoly.gens(n, _lnames(n))
    zero = MPoly(n, {}, _lnames(n))
    sq = [t * t for t in gens]
    p1 = sum(sq, zero)
    if g == 1:
        return zero + Fraction(factorial(n - 1), 8)
    if g == 2:
        return p1 * Fraction(3 * factorial(n + 1), 2 ** 9)
    if g == 3:
        p2 = sum((s * s for s in sq), zero)
        e2 = sum((sq[i] * sq[j] for i in range(n) for j in range(i + 1, n)), zero)
        return (p2 * 5 + e2 * Fraction(84, 5)) * Fraction(factorial(n + 3), 2 ** 16)
    return None


__all__ = [
    "HALF", "FULL", "U_SEED", "u_airy_rec", "u_table", "odd_partitions", "reference_u_row",
    "displayed_u2", "one_point_closed", "one_point_ode_rec", "airy_one_point",
    "airy_one_point_psi", "scaled_one_point", "volumes", "laplace_coefficients",
    "volume_recursion_residual", "volume_dilaton_residual", "volume_top_coeff_check",
    "reference_volume",
]
