"""Rational spectral curves and the Eynard-Orantin recursion.

An invariant ``omega^g_n`` with ``2g-2+n > 0`` has poles only at zeros of
``dx`` and no residues, so on a rational curve it is a finite sum

    sum c * prod_i (z_i - alpha_i)^(-k_i) dz_i.

``Multidifferential.terms`` stores that sum as ``{((alpha_1, k_1), ...): c}``.
The representation is unique, so equality and symmetry tests are exact
comparisons of dictionaries.  Each residue is taken in the local parameter
``w = z - alpha`` with the other variables kept symbolic, using

    1/(z - z1) - 1/(sigma(z) - z1) = sum_m (s^m - w^m) / t^(m+1),

where ``s = sigma(z) - alpha`` and ``t = z1 - alpha``.
"""
import enum
from fractions import Fraction
from itertools import permutations

from .algebra import LaurentSeries, MultiRatFunc, RatFunc, series_expand
from .algebra.series import compose

Z = RatFunc.gen("z")


class BranchClass(enum.Enum):
    REGULAR = "Regular"
    IRREGULAR_FLAT = "IrregularFlat"
    IRREGULAR_HIGH_POLE = "IrregularHighPole"
    IRREGULAR_SIMPLE_POLE = "IrregularSimplePole"


class CurveError(ValueError):
    pass


def _zero_series(order, center=0):
    return LaurentSeries([], order + 1, order, center)


def classify_branch_points(x, y):
    r"""
    Zeros of ``dx`` with their class.

    >>> z = RatFunc.gen()
    >>> [(a, c.value) for a, c in classify_branch_points(z * z, 1 / z)]
    [(Fraction(0, 1), 'IrregularSimplePole')]
    """
    dx = x.derivative()
    num = dx.num
    roots = num.rational_roots()
    if sum(num.multiplicity(r) for r in roots) != num.degree():
        raise CurveError("dx has zeros that are not rational")
    out = []
    for a in sorted(roots):
        if num.multiplicity(a) != 1:
            raise CurveError("dx has a non-simple zero at %s" % a)
        ys = series_expand(y, a, 1)
        v = ys.valuation() if not ys.is_zero() else 2
        if v <= -2:
            tag = BranchClass.IRREGULAR_HIGH_POLE
        elif v == -1:
            tag = BranchClass.IRREGULAR_SIMPLE_POLE
        elif ys[1]:
            tag = BranchClass.REGULAR
        else:
            tag = BranchClass.IRREGULAR_FLAT
        out.append((a, tag))
    return out


class Multidifferential:
    r"""
    ``omega^g_n`` divided by ``dz_1 ... dz_n``, stored in partial fractions.

    ``flags`` collects caveats, e.g. ``"symmetry-not-guaranteed"`` for curves
    with a flat irregular branch point.
    """

    def __init__(self, g, n, terms, flags=()):
        self.g, self.n = g, n
        self.terms = {k: v for k, v in terms.items() if v}
        self.flags = frozenset(flags)
        self._body = None

    @property
    def vars(self):
        return tuple("z%d" % (i + 1) for i in range(self.n))

    @property
    def body(self):
        """The invariant as a MultiRatFunc in ``z1, ..., zn``."""
        if self._body is None:
            self._body = terms_to_ratfunc(self.terms, self.vars)
        return self._body

    def permute(self, perm):
        """Slot i of the result is slot perm[i] of self."""
        return Multidifferential(self.g, self.n,
                                 {tuple(k[p] for p in perm): v for k, v in self.terms.items()},
                                 self.flags)

    def is_symmetric(self):
        if self.n < 2:
            return True
        for i in range(self.n - 1):
            perm = list(range(self.n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm).terms != self.terms:
                return False
        return True

    def swap_is_invariant(self, i, j):
        perm = list(range(self.n))
        perm[i], perm[j] = perm[j], perm[i]
        return self.permute(perm).terms == self.terms

    def residues(self, slot=0):
        """Nonzero residue data ``{(alpha, rest keys): value}`` in one slot."""
        out = {}
        for key, c in self.terms.items():
            a, k = key[slot]
            if k == 1:
                rest = key[:slot] + key[slot + 1:]
                out[(a, rest)] = out.get((a, rest), 0) + c
        return {k: v for k, v in out.items() if v}

    def pole_order(self, alpha, slot=0):
        alpha = Fraction(alpha)
        return max((key[slot][1] for key in self.terms if key[slot][0] == alpha), default=0)

    def one_point_coefficients(self):
        """For n = 1: ``{(alpha, k): c}``."""
        return {key[0]: c for key, c in self.terms.items()}

    def __eq__(self, other):
        return isinstance(other, Multidifferential) and self.terms == other.terms

    def __repr__(self):
        return "Multidifferential(g=%d, n=%d, %d terms)" % (self.g, self.n, len(self.terms))

    def pretty(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple((a, -e) for a, e in k)):
            c = self.terms[key]
            fac = []
            for i, (a, k) in enumerate(key):
                base = "z%d" % (i + 1) if self.n > 1 else "z"
                if a:
                    base = "(%s%s%s)" % (base, " - " if a > 0 else " + ", abs(a))
                fac.append("%s^-%d" % (base, k))
            parts.append("(%s)*%s" % (c, "*".join(fac)))
        return " + ".join(parts)


def terms_to_ratfunc(terms, vars):
    """Sum ``c * prod (v_i - alpha_i)^-k_i`` as a MultiRatFunc."""
    vars = tuple(vars)
    if not terms:
        return MultiRatFunc.const(0, vars)
    n = len(vars)
    gens = [MultiRatFunc.gen(v, vars) for v in vars]
    groups = {}
    for key, c in terms.items():
        groups.setdefault(key[0], {})[key[1:]] = c
    out = MultiRatFunc.const(0, vars)
    for (a, k), sub in groups.items():
        if n == 1:
            inner = MultiRatFunc.const(sub[()], vars)
        else:
            inner = terms_to_ratfunc(sub, vars[1:]).lift(vars)
        out = out + inner / (gens[0] - a) ** k
    return out


class SpectralCurve:
    r"""
    Rational spectral curve ``(x(z), y(z))`` with a global involution ``sigma``.

    ``residue_points`` restricts the outer residue sum (default: every zero
    of ``dx``); it exists to test that some branch points contribute nothing.
    """

    def __init__(self, x, y, sigma, name="curve", residue_points=None):
        self.x, self.y, self.sigma = RatFunc(x), RatFunc(y), RatFunc(sigma)
        self.name = name
        if self.x.compose(self.sigma) != self.x:
            raise CurveError("x is not invariant under the involution")
        if self.sigma.compose(self.sigma) != Z:
            raise CurveError("sigma is not an involution")
        self.branch_points = classify_branch_points(self.x, self.y)
        for a, _ in self.branch_points:
            if self.sigma(a) != a:
                raise CurveError("involution does not fix the branch point %s" % a)
        pts = [a for a, _ in self.branch_points]
        self.residue_points = pts if residue_points is None else [Fraction(a) for a in residue_points]
        self.dx = self.x.derivative()
        self.y_hat = self.y.compose(self.sigma)
        if self.y_hat == self.y:
            raise CurveError("y is invariant under the involution; kernel undefined")
        # denominator 2[y(z) - y(sigma z)] x'(z); this sign reproduces the
        # positive one-point tables
        self.kernel_den = 2 * (self.y - self.y_hat) * self.dx
        self.sigma_prime = self.sigma.derivative()
        self.ydx = self.y * self.dx
        self._memo = {}
        self._cache = {}

    def __repr__(self):
        return "SpectralCurve(%s: x=%s, y=%s)" % (self.name, self.x.pretty(), self.y.pretty())

    def branch_class(self, alpha):
        return dict(self.branch_points)[Fraction(alpha)]

    @property
    def has_flat_point(self):
        return any(c is BranchClass.IRREGULAR_FLAT for _, c in self.branch_points)

    def restricted(self, residue_points, name=None):
        return SpectralCurve(self.x, self.y, self.sigma, name or self.name + "-restricted",
                             residue_points)

    def scaled(self, lam, name=None):
        """Same x and involution with y multiplied by ``lam``."""
        return SpectralCurve(self.x, self.y * lam, self.sigma, name or "%s*%s" % (self.name, lam))

    # --- local expansions -------------------------------------------------
    def _series(self, tag, f, alpha, order):
        key = (tag, alpha, order)
        s = self._cache.get(key)
        if s is None:
            s = series_expand(f, alpha, order)
            self._cache[key] = s
        return s

    def kernel_valuation(self, alpha):
        """Order of vanishing of the kernel in z at alpha (negative: a pole)."""
        return 1 - self._d0(alpha)

    def _d0(self, alpha):
        key = ("d0", alpha)
        if key not in self._cache:
            self._cache[key] = series_expand(self.kernel_den, alpha, 8).valuation()
        return self._cache[key]

    def _pole(self, beta, k, alpha, order, hat):
        """Series at alpha of (z - beta)^-k, or of (sigma(z) - beta)^-k if hat."""
        if not hat and beta == alpha:
            return LaurentSeries([Fraction(1)], -k, order, alpha)
        base = self.sigma if hat else Z
        return self._series(("pole", beta, k, hat), (base - beta) ** (-k), alpha, order)

    def _s_power(self, m, alpha, order):
        return self._series(("spow", m), (self.sigma - alpha) ** m, alpha, order)

    def _kappa(self, m, alpha, order):
        f = ((self.sigma - alpha) ** m - (Z - alpha) ** m) / self.kernel_den
        return self._series(("kappa", m), f, alpha, order)

    # --- recursion --------------------------------------------------------
    def invariant(self, g, n):
        if 2 * g - 2 + n <= 0:
            raise ValueError("unstable (g, n) = (%d, %d); use omega_base" % (g, n))
        key = (g, n)
        w = self._memo.get(key)
        if w is None:
            terms = {}
            for alpha in self.residue_points:
                for k, v in self._local_contribution(g, n, alpha).items():
                    terms[k] = terms.get(k, 0) + v
            flags = ("symmetry-not-guaranteed",) if self.has_flat_point else ()
            w = Multidifferential(g, n, terms, flags)
            self._memo.setdefault(key, w)
        return w

    def _expand_stable(self, omega, sides, alpha, order):
        """Expand the leading ``len(sides)`` slots of omega at alpha.

        Returns ``{rest keys: LaurentSeries in w}``; slot i is evaluated at z
        when sides[i] is False and at sigma(z) otherwise.
        """
        nloc = len(sides)
        vmin = [0] * nloc
        for key in omega.terms:
            for i in range(nloc):
                if key[i][0] == alpha:
                    vmin[i] = min(vmin[i], -key[i][1])
        out = {}
        for key, c in omega.terms.items():
            ser = None
            for i in range(nloc):
                o = max(order - (sum(vmin) - vmin[i]), vmin[i] - 1)
                b, k = key[i]
                p = self._pole(b, k, alpha, o, sides[i])
                ser = p if ser is None else ser * p
            ser = ser.truncate(min(ser.order, order)) if ser.order > order else ser
            rest = key[nloc:]
            out[rest] = out[rest] + ser * c if rest in out else ser * c
        return out

    def _expand_bidiff(self, hat, alpha, order):
        """omega^0_2(z or sigma(z), z_j) as ``{((alpha, m + 2),): series}``."""
        out = {}
        for m in range(0, max(order, -1) + 1):
            base = self._s_power(m, alpha, order) if hat else \
                LaurentSeries([Fraction(1)], m, order, alpha)
            out[((alpha, m + 2),)] = base * (m + 1)
        return out

    def _factor(self, g, n, hat, alpha, order):
        if (g, n) == (0, 2):
            return self._expand_bidiff(hat, alpha, order)
        return self._expand_stable(self.invariant(g, n), (hat,), alpha, order)

    @staticmethod
    def _vmin(factor):
        v = 0
        for s in factor.values():
            s = s.normalized()
            if s.coeffs:
                v = min(v, s.val)
        return v

    def _local_contribution(self, g, n, alpha):
        d0 = self._d0(alpha)
        N = d0 - 2
        S = list(range(n - 1))
        F = {}

        def add(rest, ser):
            if ser.order < N:
                raise ArithmeticError("lost precision: order %d < %d" % (ser.order, N))
            ser = ser.truncate(N) if ser.order > N else ser
            F[rest] = F[rest] + ser if rest in F else ser

        def with_sp(ser):
            # sigma' times ser, exact through w^N
            ser = ser.normalized()
            if not ser.coeffs:
                return ser
            return ser * self._series(("sigma'",), self.sigma_prime, alpha, N - ser.val)

        # omega^{g-1}_{n+1}(z, sigma z, z_S)
        if g >= 1:
            if (g - 1, n + 1) == (0, 2):
                f = self.sigma_prime / (Z - self.sigma) ** 2
                add((), self._series(("diag",), f, alpha, N))
            else:
                w = self.invariant(g - 1, n + 1)
                for rest, ser in self._expand_stable(w, (False, True), alpha, N).items():
                    add(rest, with_sp(ser))
        # products over g1 + g2 = g and I + J = S
        for mask in range(1 << len(S)):
            I = [i for i in S if mask >> i & 1]
            J = [i for i in S if not mask >> i & 1]
            for g1 in range(g + 1):
                g2 = g - g1
                n1, n2 = len(I) + 1, len(J) + 1
                if (g1, n1) == (0, 1) or (g2, n2) == (0, 1):
                    continue
                bound = 3
                f1 = self._factor(g1, n1, False, alpha, N + bound)
                f2 = self._factor(g2, n2, True, alpha, N + bound)
                v1, v2 = self._vmin(f1), self._vmin(f2)
                if N - v2 > N + bound:
                    f1 = self._factor(g1, n1, False, alpha, N - v2)
                if N - v1 > N + bound:
                    f2 = self._factor(g2, n2, True, alpha, N - v1)
                for r1, s1 in f1.items():
                    for r2, s2 in f2.items():
                        rest = [None] * len(S)
                        for pos, key in zip(I, r1):
                            rest[pos] = key
                        for pos, key in zip(J, r2):
                            rest[pos] = key
                        add(tuple(rest), with_sp(s1 * s2))
        vF = None
        for ser in F.values():
            ser = ser.normalized()
            if ser.coeffs:
                vF = ser.val if vF is None else min(vF, ser.val)
        out = {}
        if vF is None:
            return out
        for m in range(1, d0 - vF):
            kap = self._kappa(m, alpha, -1 - vF)
            for rest, ser in F.items():
                tot = Fraction(0)
                for e, c in kap.items():
                    if ser.val <= -1 - e <= ser.order:
                        tot += c * ser[-1 - e]
                if tot:
                    key = ((alpha, m + 1),) + rest
                    out[key] = out.get(key, 0) + tot
        return out

    # --- checks built on the invariants ----------------------------------
    def phi_series(self, alpha, order):
        """Local antiderivative of ``y dx`` at alpha, constant term dropped."""
        s = series_expand(self.ydx, alpha, order - 1)
        return s.integral()

    def _pair_first_slot(self, omega, local):
        """Sum over alpha of Res_{z=alpha} local_alpha(z) omega(z, ...)."""
        out = {}
        kmax = max((key[0][1] for key in omega.terms), default=1)
        for alpha in self.residue_points:
            ser = local(alpha, kmax)
            for key, c in omega.terms.items():
                b, k = key[0]
                if b != alpha:
                    continue
                v = ser[k - 1] * c
                if v:
                    out[key[1:]] = out.get(key[1:], 0) + v
        return {k: v for k, v in out.items() if v}


def omega_base(curve):
    """``(omega^0_1 / dz, omega^0_2 / dz1 dz2)`` = ``(-y x', 1/(z1 - z2)^2)``."""
    z1, z2 = MultiRatFunc.gens("z1", "z2")
    return -curve.y * curve.dx, 1 / (z1 - z2) ** 2


def recursion_kernel(curve, alpha):
    """``K(z1, z) dz / dz1`` as a MultiRatFunc in ``(z, z1)``."""
    if Fraction(alpha) not in dict(curve.branch_points):
        raise CurveError("%s is not a branch point" % alpha)
    z, z1 = MultiRatFunc.gens("z", "z1")
    vars = z.vars
    sig = MultiRatFunc.from_ratfunc(curve.sigma).lift(vars)
    den = MultiRatFunc.from_ratfunc(curve.kernel_den).lift(vars)
    return (1 / (z - z1) - 1 / (sig - z1)) / den


def eo_invariant(curve, g, n):
    return curve.invariant(g, n)


def dilaton_residual(curve, g, n):
    r"""
    ``sum_alpha Res Phi omega^g_{n+1}(z, z_1..z_n) - (2g - 2 + n) omega^g_n``
    as a term dictionary; empty means zero.
    """
    big = curve.invariant(g, n + 1)
    lhs = curve._pair_first_slot(big, lambda a, k: curve.phi_series(a, k))
    small = curve.invariant(g, n).terms
    out = dict(lhs)
    for key, c in small.items():
        out[key] = out.get(key, 0) - (2 * g - 2 + n) * c
    return Multidifferential(g, n, out)


POLY = "poly"


def partial_fractions(f):
    """``{(beta, k): c}`` for ``c (z - beta)^-k`` plus ``{(POLY, e): c}`` for
    ``c z^e``: the unique decomposition of a rational function with rational
    poles."""
    out = {}
    rest = f
    for beta, order in f.poles():
        ser = series_expand(f, beta, -1)
        for k in range(1, order + 1):
            c = ser[-k]
            if c:
                out[(beta, k)] = c
                rest = rest - c * (Z - beta) ** (-k)
    if not rest.is_polynomial():
        raise CurveError("partial fraction remainder is not polynomial")
    lead = rest.den.lc()
    for e, c in enumerate(rest.num.coeffs):
        if c:
            out[(POLY, e)] = c / lead
    return out


def string_residual(curve, g, n, m):
    r"""
    Left minus right side of the string equation (``m`` in {0, 1}),

        sum_alpha Res y x^m omega^g_{n+1}(z, z_S)
            + sum_j d/dz_j (x(z_j)^m omega^g_n(z_S) / x'(z_j)),

    as a term dictionary in the basis ``(z - beta)^-k`` and ``z^e``
    (``(POLY, e)`` slots); empty means zero.
    """
    if m not in (0, 1):
        raise ValueError("m must be 0 or 1")
    big = curve.invariant(g, n + 1)
    weight = curve.y * curve.x ** m
    out = dict(curve._pair_first_slot(big, lambda a, k: series_expand(weight, a, k)))
    factor = curve.x ** m / curve.dx
    cache = {}
    for key, c in curve.invariant(g, n).terms.items():
        for j, (beta, k) in enumerate(key):
            if (beta, k) not in cache:
                cache[(beta, k)] = partial_fractions((factor * (Z - beta) ** (-k)).derivative())
            for slot, d in cache[(beta, k)].items():
                nk = key[:j] + (slot,) + key[j + 1:]
                out[nk] = out.get(nk, 0) + c * d
    return {k: v for k, v in out.items() if v}


def inversion_pullback(omega, slot):
    """Terms of ``omega`` with ``z_slot`` replaced by ``1/z_slot`` (as a differential)."""
    cache = {}
    out = {}
    for key, c in omega.terms.items():
        beta, k = key[slot]
        if (beta, k) not in cache:
            # (1/z - beta)^-k d(1/z) = -z^(k-2) (1 - beta z)^-k dz
            cache[(beta, k)] = partial_fractions(-Z ** (k - 2) / (1 - beta * Z) ** k)
        for new_slot, d in cache[(beta, k)].items():
            nk = key[:slot] + (new_slot,) + key[slot + 1:]
            out[nk] = out.get(nk, 0) + c * d
    return {k: v for k, v in out.items() if v}


def skew_residual(omega, slot=0):
    """``omega(.., 1/z, ..) + omega(.., z, ..)``; empty when skew invariant."""
    out = inversion_pullback(omega, slot)
    for key, c in omega.terms.items():
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def symplectic_invariant(curve, g):
    """``F_g = sum_alpha Res Phi omega^g_1``."""
    if g < 2:
        raise ValueError("symplectic invariants are taken for g >= 2")
    res = curve._pair_first_slot(curve.invariant(g, 1), lambda a, k: curve.phi_series(a, k))
    return res.get((), Fraction(0))


def expand_invariant(omega, orders, coordinate=None):
    r"""
    Taylor coefficients of ``omega / prod dt_i`` at ``t_i = 0``.

    Without ``coordinate`` the local parameter is ``t = z``.  Otherwise
    ``coordinate`` is a LaurentSeries ``z(t)`` vanishing at 0 and the
    coefficients are those of ``omega / prod dt_i`` after substitution.
    Returns ``{exponent tuple: Fraction}`` with exponent i up to orders[i].
    """
    if isinstance(orders, int):
        orders = (orders,) * omega.n
    cache = {}

    def slot_series(b, k, order):
        key = (b, k, order)
        if key not in cache:
            if b == 0:
                raise CurveError("invariant has a pole at the expansion point")
            f = (Z - b) ** (-k)
            if coordinate is None:
                s = series_expand(f, 0, order)
            else:
                zc = coordinate.truncate(order + 1) if coordinate.order > order + 1 else coordinate
                s = compose(series_expand(f, 0, order + 1), zc) * zc.derivative()
            cache[key] = [s[e] for e in range(order + 1)]
        return cache[key]

    out = {}
    for key, c in omega.terms.items():
        partial = {(): c}
        for i, (b, k) in enumerate(key):
            coeffs = slot_series(b, k, orders[i])
            nxt = {}
            for e0, v in partial.items():
                for e, cc in enumerate(coeffs):
                    if cc:
                        nxt[e0 + (e,)] = nxt.get(e0 + (e,), 0) + v * cc
            partial = nxt
        for e, v in partial.items():
            out[e] = out.get(e, 0) + v
    return {e: v for e, v in out.items() if v}


# --- named curves ----------------------------------------------------------
_NAMED = {}


def _build(name):
    z = Z
    if name == "dessin":
        return SpectralCurve(z + 1 / z + 2, z / (1 + z), 1 / z, name)
    if name == "airy":
        return SpectralCurve(z * z, 1 / z, -z, name)
    if name == "airy-half":
        return SpectralCurve(z * z / 2, 1 / z, -z, name)
    if name == "gauss-regular":
        return SpectralCurve(z + 1 / z, z, 1 / z, name)
    if name == "flat-counterexample":
        return SpectralCurve(z * z, z ** 3, -z, name)
    if name == "high-pole-test":
        return SpectralCurve(z + 1 / z, z + 1 / (1 + z) ** 3, 1 / z, name)
    raise KeyError(name)


CURVE_NAMES = ("dessin", "airy", "airy-half", "gauss-regular", "flat-counterexample",
               "high-pole-test")


def named_curve(name):
    c = _NAMED.get(name)
    if c is None:
        c = _NAMED.setdefault(name, _build(name))
    return c


def is_symmetric_ratfunc(f):
    """Transposition test on a MultiRatFunc body (slow path, for cross-checks)."""
    vars = f.vars
    for p in permutations(vars):
        if f.subs({a: MultiRatFunc.gen(b, vars) for a, b in zip(vars, p)}) != f:
            return False
    return True
