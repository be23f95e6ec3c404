"""Wave function of dessin counts and its quantum curve.

The modified wave function is ``Zm(x, hbar) = sum_e a_e(hbar) x^-e`` with
Laurent-polynomial coefficients ``a_e``.  Series in ``x^-1`` are plain dicts
``{exponent of x: HLaurent}``.
"""
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .dessins import b_big, catalan_series_residual


class HLaurent:
    r"""
    Laurent polynomial in hbar with rational coefficients.

    >>> h = HLaurent.hbar()
    >>> (h + h ** -1) ** 2
    HLaurent(hbar^-2 + 2 + hbar^2)
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {k: Fraction(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def hbar(cls, k=1):
        return cls({k: 1})

    @classmethod
    def const(cls, v):
        return cls({0: v})

    def _coerce(self, o):
        return o if isinstance(o, HLaurent) else HLaurent.const(o)

    def __add__(self, o):
        o = self._coerce(o)
        out = dict(self.c)
        for k, v in o.c.items():
            out[k] = out.get(k, 0) + v
        return HLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return HLaurent({k: -v for k, v in self.c.items()})

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        out = {}
        for a, u in self.c.items():
            for b, w in o.c.items():
                out[a + b] = out.get(a + b, 0) + u * w
        return HLaurent(out)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return HLaurent({k: v / s for k, v in self.c.items()})

    def __pow__(self, k):
        if k < 0:
            if len(self.c) != 1:
                raise ArithmeticError("only monomials are invertible")
            (e, v), = self.c.items()
            return HLaurent({e * k: Fraction(1) / v ** -k})
        out = HLaurent.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        return self.c == self._coerce(o).c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def __getitem__(self, k):
        return self.c.get(k, Fraction(0))

    def support(self):
        return (min(self.c), max(self.c)) if self.c else None

    def pretty(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c):
            v = self.c[k]
            mono = "" if k == 0 else ("hbar" if k == 1 else "hbar^%d" % k)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (v, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "HLaurent(%s)" % self.pretty()


@lru_cache(maxsize=None)
def stirling_first(n, k):
    """Unsigned Stirling numbers of the first kind."""
    if n == 0:
        return 1 if k == 0 else 0
    if k <= 0 or k > n:
        return 0
    return stirling_first(n - 1, k - 1) + (n - 1) * stirling_first(n - 1, k)


def wave_coeff(e):
    """``a_e = hbar^e/e! [hbar^-1 (hbar^-1 + 1) ... (hbar^-1 + e - 1)]^2``."""
    inv = HLaurent.hbar(-1)
    rising = HLaurent.const(1)
    for k in range(e):
        rising = rising * (inv + k)
    return rising * rising * HLaurent.hbar(e) / factorial(e)


def f_bullet(v, e):
    """Weighted count of possibly disconnected dessins with v vertices and e edges."""
    return Fraction(sum(stirling_first(e, a) * stirling_first(e, v - a) for a in range(v + 1)),
                    factorial(e))


def wave_from_stirling(e):
    return HLaurent({e - v: f_bullet(v, e) for v in range(2 * e + 1)})


def wave_series(E, perturb=None):
    """``{-e: a_e}`` for e = 0..E; ``perturb`` maps e to an added HLaurent."""
    out = {-e: wave_coeff(e) for e in range(E + 1)}
    for e, d in (perturb or {}).items():
        out[-e] = out[-e] + d
    return out


# Operators on x-series.  ``low`` is the lowest exponent still exact.

def _clean(s):
    return {k: v for k, v in s.items() if v}


def x_mul(s, k=1):
    return {e + k: v for e, v in s.items()}


def d_x(s):
    return _clean({e - 1: v * e for e, v in s.items()})


def h_mul(s, h):
    return {e: v * h for e, v in s.items()}


def s_add(*ss):
    out = {}
    for s in ss:
        for e, v in s.items():
            out[e] = out.get(e, HLaurent()) + v
    return _clean(out)


def s_neg(s):
    return {e: -v for e, v in s.items()}


def y_op(s, conjugated=False):
    """``yhat = -hbar d/dx``; conjugated by ``x^(-1/hbar)`` it gains ``+ x^-1``."""
    out = h_mul(d_x(s), HLaurent.hbar() * -1)
    if conjugated:
        out = s_add(out, x_mul(s, -1))
    return out


def abc_operator(s):
    """``[x hbar^2 d^2 + hbar (hbar - 2 + x) d + x^-1]`` applied to s."""
    h = HLaurent.hbar()
    d1 = d_x(s)
    return s_add(h_mul(x_mul(d_x(d1)), h * h),
                 h_mul(d1, h * (h - 2)),
                 h_mul(x_mul(d1), h),
                 x_mul(s, -1))


def _truncate(s, E):
    return {e: v for e, v in s.items() if -E <= e}


def ode_residual(E, perturb=None):
    """Coefficients of ``x^-1, ..., x^-E`` after applying the abc operator."""
    s = wave_series(E + 1, perturb)
    r = abc_operator(s)
    return [r.get(-k, HLaurent()) for k in range(1, E + 1)]


def step_residual(E):
    """``(e+1) a_{e+1} - hbar (hbar^-1 + e)^2 a_e`` for e = 0..E-1."""
    h = HLaurent.hbar()
    return [wave_coeff(e + 1) * (e + 1) - h * (h ** -1 + e) ** 2 * wave_coeff(e)
            for e in range(E)]


def s_mul(a, b, E):
    out = {}
    for i, u in a.items():
        for j, w in b.items():
            if i + j >= -E:
                out[i + j] = out.get(i + j, HLaurent()) + u * w
    return _clean(out)


def series_log1p(F, E):
    """``log(1 + F)`` for F with only negative x-exponents, through x^-E."""
    out, power = {}, {0: HLaurent.const(1)}
    for k in range(1, E + 1):
        power = s_mul(power, F, E)
        out = s_add(out, h_mul(power, HLaurent.const(Fraction((-1) ** (k + 1), k))))
    return out


def series_exp(G, E):
    out, term = {0: HLaurent.const(1)}, {0: HLaurent.const(1)}
    for k in range(1, E + 1):
        term = h_mul(s_mul(term, G, E), HLaurent.const(Fraction(1, k)))
        out = s_add(out, term)
    return out


def _compositions(e, n):
    if n == 1:
        yield (e,)
        return
    for first in range(1, e - n + 2):
        for rest in _compositions(e - first, n - 1):
            yield (first,) + rest


def connected_count(v, e, count=b_big):
    """``f(v, e)`` from labelled counts: ``sum (1/n!) sum_{|mu| = e} B_{g,n}(mu)``."""
    total = Fraction(0)
    for n in range(1, e + 1):
        twice_g = e + 2 - n - v
        if twice_g < 0 or twice_g % 2:
            continue
        g = twice_g // 2
        total += sum(count(g, mu) for mu in _compositions(e, n)) / factorial(n)
    return total


def connected_disconnected_check(E):
    """Residuals ``[hbar^(e-v) x^-e] log Zm - f(v, e)`` plus the exp/log round trip.

    Returns ``(table, round_trip)`` where ``table`` maps (v, e) to the
    residual and ``round_trip`` lists nonzero coefficients of
    ``exp(log Zm) - Zm``.
    """
    Z = wave_series(E)
    F = {k: v for k, v in Z.items() if k < 0}
    L = series_log1p(F, E)
    table = {}
    for e in range(1, E + 1):
        coeff = L.get(-e, HLaurent())
        for v in range(1, 2 * e + 1):
            table[(v, e)] = coeff[e - v] - connected_count(v, e)
    back = series_exp(L, E)
    diff = s_add(back, s_neg(Z))
    return table, sorted(diff)


def semiclassical_residual(K, perturb=None):
    """Coefficients of ``x yhat^2 - x yhat + 1`` at ``x^0 .. x^-K``,
    for ``yhat = sum_{m>=0} U_0(m) x^(-m-1)``; ``perturb`` adds to ``U_0(m)``."""
    if not perturb:
        return catalan_series_residual(K)
    from .dessins import u_count
    c = [u_count(0, (m,)) if m else Fraction(1) for m in range(K + 2)]
    for m, d in perturb.items():
        c[m] += d
    out = [1 - c[0]]
    for k in range(1, K + 1):
        out.append(sum(c[i] * c[k - 1 - i] for i in range(k)) - c[k])
    return out


def ordered_forms(s, conjugated=False, correction=True):
    """``(yxy - xy + 1) s`` and ``(x y^2 - x y + 1 - hbar y) s``.

    With ``correction=False`` the ``- hbar y`` term is dropped from the
    normal-ordered form.
    """
    def y(t):
        return y_op(t, conjugated)
    one = s
    first = s_add(y(x_mul(y(s))), s_neg(x_mul(y(s))), one)
    second = s_add(x_mul(y(y(s))), s_neg(x_mul(y(s))), one)
    if correction:
        second = s_add(second, s_neg(h_mul(y(s), HLaurent.hbar())))
    return first, second


def normal_ordering_residual(E, correction=True):
    """Coefficients at ``x^1 .. x^-E`` of both conjugated forms applied to Zm.

    Returns ``(first, second)`` lists; both vanish when the forms agree and
    annihilate the wave function.
    """
    s = wave_series(E + 3)
    a, b = ordered_forms(s, conjugated=True, correction=correction)
    rng = range(1, -E - 1, -1)
    return ([a.get(k, HLaurent()) for k in rng], [b.get(k, HLaurent()) for k in rng])


__all__ = [
    "HLaurent", "stirling_first", "wave_coeff", "f_bullet", "wave_from_stirling", "wave_series",
    "ode_residual", "step_residual", "abc_operator", "connected_count",
    "connected_disconnected_check", "semiclassical_residual", "ordered_forms",
    "normal_ordering_residual", "series_log1p", "series_exp", "y_op", "x_mul", "d_x",
]
