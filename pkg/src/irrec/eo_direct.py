"""One recursion step evaluated literally at rational points.

Given the lower invariants, ``omega^g_n(p_1, ..., p_n)`` at a rational point
is a sum of residues of a univariate rational function of the integration
variable.  Those residues are taken with ``residue_at`` on the whole
integrand, sharing none of the local-expansion code of ``curves``.  Checking
every (g, n) in turn against the engine covers the full recursion by
induction.
"""
from fractions import Fraction

from .algebra import RatFunc, residue_at

Z = RatFunc.gen("z")


def evaluate_terms(terms, args):
    """``sum c prod (a_i - alpha_i)^-k_i`` for numbers or RatFunc arguments."""
    total = Fraction(0)
    for key, c in terms.items():
        t = c
        for a, (b, k) in zip(args, key):
            t = t * (a - b) ** (-k)
        total = total + t
    return total


def step_value(curve, g, n, point, lower=None):
    r"""
    ``omega^g_n`` at the rational ``point`` from one literal residue step.

    ``lower(g, n)`` returns lower invariants (default: the curve's own).
    """
    lower = lower or curve.invariant
    p1, rest = Fraction(point[0]), [Fraction(p) for p in point[1:]]
    sz = curve.sigma
    kernel = (1 / (Z - p1) - 1 / (sz - p1)) / (2 * (curve.y - curve.y_hat) * curve.dx)

    def omega(gg, nn, args):
        if (gg, nn) == (0, 2):
            return (args[0] - args[1]) ** (-2)
        return evaluate_terms(lower(gg, nn).terms, args)

    bracket = RatFunc(0)
    if g >= 1:
        bracket = bracket + omega(g - 1, n + 1, [Z, sz] + rest)
    k = len(rest)
    for mask in range(1 << k):
        I = [rest[i] for i in range(k) if mask >> i & 1]
        J = [rest[i] for i in range(k) if not mask >> i & 1]
        for g1 in range(g + 1):
            g2 = g - g1
            if (g1, len(I) + 1) == (0, 1) or (g2, len(J) + 1) == (0, 1):
                continue
            bracket = bracket + omega(g1, len(I) + 1, [Z] + I) * omega(g2, len(J) + 1, [sz] + J)
    integrand = kernel * bracket * curve.sigma_prime
    return sum((residue_at(integrand, a) for a in curve.residue_points), Fraction(0))


def sample_points(n, count, seed=0):
    """Deterministic rational points avoiding 0, +-1 and coincidences."""
    import random
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        pt = tuple(Fraction(rng.randint(2, 40), rng.randint(2, 40)) * rng.choice((1, -1))
                   for _ in range(n))
        if len(set(pt)) == n and all(abs(p) != 1 for p in pt) \
                and all(p * q != 1 for p in pt for q in pt):
            out.append(pt)
    return out


def step_check(curve, g, n, count=3, seed=0):
    """List of ``(point, engine value, direct value)`` mismatches (empty if none)."""
    w = curve.invariant(g, n)
    bad = []
    for pt in sample_points(n, count, seed):
        a = evaluate_terms(w.terms, pt)
        b = step_value(curve, g, n, pt)
        if a != b:
            bad.append((pt, a, b))
    return bad
